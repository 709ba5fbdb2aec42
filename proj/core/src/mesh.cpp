#include "minsurf/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>

#include "minsurf/errors.hpp"
#include "minsurf/quadrature.hpp"

namespace minsurf {

namespace {

Vec3 gauss_normal(Complex g) {
    const double n2 = std::norm(g);
    if (!std::isfinite(n2) || n2 > 1e16) return {0.0, 0.0, 1.0};
    const double denom = 1.0 + n2;
    return {2.0 * g.real() / denom, 2.0 * g.imag() / denom, (n2 - 1.0) / denom};
}

Vec3c edge_integral(const PhiTriple& phi, Complex a, Complex b, double rel_tol) {
    const Complex dz = b - a;
    return integrate_gk(
        [&](double t) {
            Vec3c v = phi.eval(a + t * dz);
            for (auto& c : v) c *= dz;
            return v;
        },
        0.0, 1.0, rel_tol);
}

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

} // namespace

MeshResult integrate_surface(const WeierstrassSurface& S, const GridSpec& grid, Complex basepoint) {
    if (grid.nr < 2 || grid.ntheta < 4) throw input_error("grid must be at least 2 x 4");
    const PhiTriple phi = PhiTriple::from_surface(S);
    auto poles = phi.finite_poles();
    if (S.is_sphere()) {
        for (const auto& p : S.sphere_data().punctures)
            if (p.is_finite()) poles.push_back(p.value());
    }

    MeshResult mr;
    mr.torus_grid = !S.is_sphere();
    mr.ncirc = grid.ntheta;
    mr.center = grid.center;

    // Grid points.
    int rows;
    if (!mr.torus_grid) {
        if (!(grid.rmax > grid.rmin && grid.rmin > 0.0))
            throw input_error("annulus needs 0 < rmin < rmax");
        mr.nr = grid.nr;
        rows = grid.nr + 1;
        mr.r0 = grid.rmin;
        mr.dr = (grid.rmax - grid.rmin) / grid.nr;
        mr.dtheta = 2.0 * M_PI / grid.ntheta;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < grid.ntheta; ++j) {
                const double r = grid.rmin + i * mr.dr;
                mr.grid_z.push_back(grid.center + std::polar(r, j * mr.dtheta));
            }
    } else {
        const double s = S.torus_data().torus.omega1();
        mr.nr = grid.nr;
        rows = grid.nr; // wraps in both directions
        mr.dr = s / grid.nr;
        mr.dtheta = s / grid.ntheta;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < grid.ntheta; ++j)
                mr.grid_z.push_back(Complex{(i + 0.5) * mr.dr, (j + 0.5) * mr.dtheta});
    }

    // Vertex liveness: keep a safety distance from every pole/puncture.
    const int npts = static_cast<int>(mr.grid_z.size());
    std::vector<bool> alive(npts, true);
    for (int idx = 0; idx < npts; ++idx)
        for (const auto& p : poles)
            if (std::abs(mr.grid_z[idx] - p) < grid.delta_path) {
                alive[idx] = false;
                ++mr.dropped;
                break;
            }

    // Edge integrals: radial/"u" edges (i -> i+1) and circular/"v" edges
    // (j -> j+1, wrapping).
    const int row_edges = mr.torus_grid ? rows : rows - 1;
    std::vector<Vec3c> eu(static_cast<size_t>(row_edges) * grid.ntheta,
                          Vec3c{{{0.0}, {0.0}, {0.0}}});
    std::vector<bool> eu_ok(eu.size(), false);
    std::vector<Vec3c> ev(static_cast<size_t>(rows) * grid.ntheta, Vec3c{{{0.0}, {0.0}, {0.0}}});
    std::vector<bool> ev_ok(ev.size(), false);

    auto gidx = [&](int i, int j) { return mr.gindex(i, j); };
    for (int i = 0; i < row_edges; ++i)
        for (int j = 0; j < grid.ntheta; ++j) {
            const int a = gidx(i, j), b = gidx((i + 1) % rows, j);
            if (!alive[a] || !alive[b]) continue;
            Complex zb = mr.grid_z[b];
            if (mr.torus_grid && i + 1 == rows) zb += Complex{rows * mr.dr, 0.0};
            eu[i * grid.ntheta + j] = edge_integral(phi, mr.grid_z[a], zb, grid.rel_tol);
            eu_ok[i * grid.ntheta + j] = true;
        }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < grid.ntheta; ++j) {
            const int a = gidx(i, j), b = gidx(i, j + 1);
            if (!alive[a] || !alive[b]) continue;
            Complex zb = mr.grid_z[b];
            if (!mr.torus_grid) {
                // Chord between adjacent angular nodes.
            } else if (j + 1 == grid.ntheta) {
                zb += Complex{0.0, grid.ntheta * mr.dtheta};
            }
            ev[i * grid.ntheta + j] = edge_integral(phi, mr.grid_z[a], zb, grid.rel_tol);
            ev_ok[i * grid.ntheta + j] = true;
        }

    // Spanning-tree accumulation from the vertex nearest the basepoint.
    std::vector<Vec3> pos(npts, {0.0, 0.0, 0.0});
    std::vector<bool> placed(npts, false);
    int root = -1;
    double best = 1e300;
    for (int idx = 0; idx < npts; ++idx) {
        if (!alive[idx]) continue;
        const double dist = std::abs(mr.grid_z[idx] - basepoint);
        if (dist < best) {
            best = dist;
            root = idx;
        }
    }
    if (root < 0) throw input_error("grid has no usable vertices");
    // Offset the root by the integral from the basepoint when the segment is
    // safely away from poles.
    {
        bool safe = true;
        for (const auto& p : poles) {
            const Complex a = basepoint, b = mr.grid_z[root], ab = b - a;
            double t = std::norm(ab) > 0 ? (((p - a) * std::conj(ab)).real() / std::norm(ab)) : 0.0;
            t = std::clamp(t, 0.0, 1.0);
            if (std::abs(p - (a + t * ab)) < grid.delta_path) safe = false;
        }
        if (safe) {
            const Vec3c v = edge_integral(phi, basepoint, mr.grid_z[root], grid.rel_tol);
            pos[root] = {v[0].real(), v[1].real(), v[2].real()};
        }
    }
    placed[root] = true;
    std::deque<int> queue{root};
    auto relax = [&](int from, int to, const Vec3c& integral, double sign) {
        if (placed[to] || !alive[to]) return;
        pos[to] = {pos[from][0] + sign * integral[0].real(),
                   pos[from][1] + sign * integral[1].real(),
                   pos[from][2] + sign * integral[2].real()};
        placed[to] = true;
        queue.push_back(to);
    };
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        const int i = cur / grid.ntheta, j = cur % grid.ntheta;
        if (i < row_edges && eu_ok[i * grid.ntheta + j])
            relax(cur, gidx(i + 1, j), eu[i * grid.ntheta + j], +1.0);
        if (i > 0 && eu_ok[(i - 1) * grid.ntheta + j])
            relax(cur, gidx(i - 1, j), eu[(i - 1) * grid.ntheta + j], -1.0);
        if (mr.torus_grid && i == 0 && eu_ok[(rows - 1) * grid.ntheta + j])
            relax(cur, gidx(rows - 1, j), eu[(rows - 1) * grid.ntheta + j], -1.0);
        if (mr.torus_grid && i == rows - 1 && eu_ok[i * grid.ntheta + j])
            relax(cur, gidx(0, j), eu[i * grid.ntheta + j], +1.0);
        if (ev_ok[i * grid.ntheta + j]) relax(cur, gidx(i, j + 1), ev[i * grid.ntheta + j], +1.0);
        const int jm = (j - 1 + grid.ntheta) % grid.ntheta;
        if (ev_ok[i * grid.ntheta + jm]) relax(cur, gidx(i, jm), ev[i * grid.ntheta + jm], -1.0);
    }

    // Emit vertices and quads.
    mr.vertex_of.assign(npts, -1);
    for (int idx = 0; idx < npts; ++idx) {
        if (!alive[idx] || !placed[idx]) continue;
        mr.vertex_of[idx] = static_cast<int>(mr.mesh.vertices.size());
        mr.mesh.vertices.push_back(pos[idx]);
        mr.mesh.normals.push_back(gauss_normal(S.g_at(mr.grid_z[idx])));
    }
    const int face_rows = mr.torus_grid ? rows : rows - 1;
    for (int i = 0; i < face_rows; ++i)
        for (int j = 0; j < grid.ntheta; ++j) {
            const int a = mr.vertex_of[gidx(i, j)];
            const int b = mr.vertex_of[gidx(i + 1, j)];
            const int c = mr.vertex_of[gidx(i + 1, j + 1)];
            const int d = mr.vertex_of[gidx(i, j + 1)];
            if (a < 0 || b < 0 || c < 0 || d < 0) continue;
            mr.mesh.quads.push_back({a, b, c, d});
        }

    // Face loop defects (path independence within cells) and ring periods
    // across the wrap seam.
    for (int i = 0; i < face_rows; ++i)
        for (int j = 0; j < grid.ntheta; ++j) {
            if (!eu_ok[i * grid.ntheta + j] || !ev_ok[i * grid.ntheta + j]) continue;
            const int jp = (j + 1) % grid.ntheta;
            const int ip = (i + 1) % rows;
            if (!eu_ok[i * grid.ntheta + jp] || !ev_ok[ip * grid.ntheta + j]) continue;
            Vec3 loop;
            for (int c = 0; c < 3; ++c)
                loop[c] = eu[i * grid.ntheta + j][c].real() +
                          ev[ip * grid.ntheta + j][c].real() -
                          eu[i * grid.ntheta + jp][c].real() - ev[i * grid.ntheta + j][c].real();
            mr.max_face_defect = std::max(mr.max_face_defect, norm3(loop));
        }
    for (int i = 0; i < rows; ++i) {
        Vec3 ring{0.0, 0.0, 0.0};
        bool complete_ring = true;
        for (int j = 0; j < grid.ntheta; ++j) {
            if (!ev_ok[i * grid.ntheta + j]) {
                complete_ring = false;
                break;
            }
            for (int c = 0; c < 3; ++c) ring[c] += ev[i * grid.ntheta + j][c].real();
        }
        mr.seam_defect.push_back(complete_ring ? norm3(ring)
                                               : std::numeric_limits<double>::quiet_NaN());
    }
    return mr;
}

MeshQuality mesh_quality(const MeshResult& mr) {
    MeshQuality q;
    const int rows = mr.torus_grid ? mr.nr : mr.nr + 1;
    auto vertex = [&](int i, int j) -> const Vec3* {
        if (!mr.torus_grid && (i < 0 || i >= rows)) return nullptr;
        const int wrapped_i = mr.torus_grid ? ((i % rows) + rows) % rows : i;
        const int v = mr.vertex_of[mr.gindex(wrapped_i, j)];
        return v >= 0 ? &mr.mesh.vertices[v] : nullptr;
    };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < mr.ncirc; ++j) {
            const Vec3* c = vertex(i, j);
            const Vec3* rp = vertex(i + 1, j);
            const Vec3* rm = vertex(i - 1, j);
            const Vec3* tp = vertex(i, j + 1);
            const Vec3* tm = vertex(i, j - 1);
            if (!c || !rp || !rm || !tp || !tm) continue;
            Vec3 xr, xt, xrr, xtt;
            for (int d = 0; d < 3; ++d) {
                xr[d] = ((*rp)[d] - (*rm)[d]) / (2.0 * mr.dr);
                xt[d] = ((*tp)[d] - (*tm)[d]) / (2.0 * mr.dtheta);
                xrr[d] = ((*rp)[d] - 2.0 * (*c)[d] + (*rm)[d]) / (mr.dr * mr.dr);
                xtt[d] = ((*tp)[d] - 2.0 * (*c)[d] + (*tm)[d]) / (mr.dtheta * mr.dtheta);
            }
            Vec3 lap, xu, xv;
            if (!mr.torus_grid) {
                const double r = mr.r0 + i * mr.dr;
                const double theta = j * mr.dtheta;
                for (int d = 0; d < 3; ++d)
                    lap[d] = xrr[d] + xr[d] / r + xtt[d] / (r * r);
                // Conformal coordinates z = center + r e^{i theta}:
                // du dv frame from the polar frame.
                const double ct = std::cos(theta), st = std::sin(theta);
                for (int d = 0; d < 3; ++d) {
                    xu[d] = ct * xr[d] - st * xt[d] / r;
                    xv[d] = st * xr[d] + ct * xt[d] / r;
                }
            } else {
                for (int d = 0; d < 3; ++d) {
                    lap[d] = xrr[d] + xtt[d];
                    xu[d] = xr[d];
                    xv[d] = xt[d];
                }
            }
            q.harmonic_residual = std::max(q.harmonic_residual, norm3(lap));
            const double nu = norm3(xu), nv = norm3(xv);
            if (nu + nv > 0.0) {
                q.isothermal_diff = std::max(q.isothermal_diff, std::abs(nu - nv) / (nu + nv));
                if (nu * nv > 0.0) {
                    const double dot = xu[0] * xv[0] + xu[1] * xv[1] + xu[2] * xv[2];
                    q.isothermal_dot = std::max(q.isothermal_dot, std::abs(dot) / (nu * nv));
                }
            }
            // Geometric normal against the stereographic one stored on the
            // mesh.
            Vec3 cross{xu[1] * xv[2] - xu[2] * xv[1], xu[2] * xv[0] - xu[0] * xv[2],
                       xu[0] * xv[1] - xu[1] * xv[0]};
            const double cn = norm3(cross);
            if (cn > 0.0) {
                const Vec3& N = mr.mesh.normals[mr.vertex_of[mr.gindex(i, j)]];
                double err = 0.0;
                for (int d = 0; d < 3; ++d) err += (cross[d] / cn - N[d]) * (cross[d] / cn - N[d]);
                q.normal_error = std::max(q.normal_error, std::sqrt(err));
            }
        }
    return q;
}

void write_obj(const SurfaceMesh& mesh, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw input_error("cannot open '" + path + "' for writing");
    for (const auto& v : mesh.vertices) std::fprintf(f, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    for (const auto& n : mesh.normals) std::fprintf(f, "vn %.17g %.17g %.17g\n", n[0], n[1], n[2]);
    for (const auto& q : mesh.quads)
        std::fprintf(f, "f %d//%d %d//%d %d//%d %d//%d\n", q[0] + 1, q[0] + 1, q[1] + 1, q[1] + 1,
                     q[2] + 1, q[2] + 1, q[3] + 1, q[3] + 1);
    std::fclose(f);
}

void write_ply(const SurfaceMesh& mesh, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw input_error("cannot open '" + path + "' for writing");
    std::fprintf(f,
                 "ply\nformat ascii 1.0\nelement vertex %zu\n"
                 "property double x\nproperty double y\nproperty double z\n"
                 "property double nx\nproperty double ny\nproperty double nz\n"
                 "element face %zu\nproperty list uchar int vertex_indices\nend_header\n",
                 mesh.vertices.size(), mesh.quads.size());
    for (size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& v = mesh.vertices[i];
        const auto& n = mesh.normals[i];
        std::fprintf(f, "%.17g %.17g %.17g %.17g %.17g %.17g\n", v[0], v[1], v[2], n[0], n[1], n[2]);
    }
    for (const auto& q : mesh.quads)
        std::fprintf(f, "4 %d %d %d %d\n", q[0], q[1], q[2], q[3]);
    std::fclose(f);
}

} // namespace minsurf
