#pragma once

#include <vector>

namespace minsurf {

/// Finite formal sum of points with integer multiplicities. Pt must provide
/// same_point(a, b) via ADL.
template <class Pt>
struct Divisor {
    struct Entry {
        Pt point;
        int mult;
    };
    std::vector<Entry> entries;

    void add(const Pt& p, int m) {
        if (m == 0) return;
        for (auto& e : entries) {
            if (same_point(e.point, p)) {
                e.mult += m;
                return;
            }
        }
        entries.push_back({p, m});
    }

    void prune() {
        std::erase_if(entries, [](const Entry& e) { return e.mult == 0; });
    }

    int degree() const {
        int s = 0;
        for (const auto& e : entries) s += e.mult;
        return s;
    }

    int order_at(const Pt& p) const {
        for (const auto& e : entries)
            if (same_point(e.point, p)) return e.mult;
        return 0;
    }

    Divisor operator-() const {
        Divisor d = *this;
        for (auto& e : d.entries) e.mult = -e.mult;
        return d;
    }

    friend Divisor operator+(Divisor a, const Divisor& b) {
        for (const auto& e : b.entries) a.add(e.point, e.mult);
        a.prune();
        return a;
    }
};

} // namespace minsurf
