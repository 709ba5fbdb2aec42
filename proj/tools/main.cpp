// Command-line front end: analysis reports, catalog access, meshes, periods,
// covering arithmetic, unicity scans, disk-characteristic estimates and total
// curvature for Weierstrass data given as JSON or by catalog name.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "minsurf/builder.hpp"
#include "minsurf/catalog.hpp"
#include "minsurf/covering.hpp"
#include "minsurf/json_io.hpp"
#include "minsurf/mesh.hpp"
#include "minsurf/nevanlinna.hpp"

using namespace minsurf;

namespace {

struct SurfaceOptions {
    std::string spec;
    double a = -1.0, t = 0.0;
    int j = 1, family_case = 1;
    double sigma_re = 1.0, sigma_im = 0.0;
    double theta = 0.0;
};

WeierstrassSurface load_surface(const SurfaceOptions& o) {
    WeierstrassSurface S = [&] {
        if (!o.spec.empty() && o.spec[0] == '@') {
            CatalogParams p;
            p.a = o.a;
            p.t = o.t;
            p.j = o.j;
            p.family_case = o.family_case;
            p.sigma = Complex{o.sigma_re, o.sigma_im};
            return catalog_make(o.spec.substr(1), p);
        }
        return surface_from_json_file(o.spec);
    }();
    if (o.theta != 0.0) S = S.associated(o.theta);
    return S;
}

void add_surface_options(CLI::App* cmd, SurfaceOptions& o, bool with_theta = false) {
    cmd->add_option("surface", o.spec, "surface JSON file or @catalog-name")->required();
    cmd->add_option("--a", o.a, "family parameter a (catalog)");
    cmd->add_option("--t", o.t, "family parameter t (catalog)");
    cmd->add_option("--j", o.j, "family parameter j (catalog)");
    cmd->add_option("--case", o.family_case, "family case 1 or 2 (catalog)");
    cmd->add_option("--sigma-re", o.sigma_re, "Re sigma (catalog)");
    cmd->add_option("--sigma-im", o.sigma_im, "Im sigma (catalog)");
    if (with_theta)
        cmd->add_option("--theta", o.theta, "associated-family rotation of hdz, radians");
}

std::vector<double> parse_r_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw input_error("empty r list");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass-data analyzer for minimal surfaces"};
    app.require_subcommand(1);

    // analyze
    SurfaceOptions an_opt;
    bool an_json = false, an_text = false;
    double an_eps = kPointTol;
    auto* an = app.add_subcommand("analyze", "full analysis report with bound verdicts");
    add_surface_options(an, an_opt);
    an->add_flag("--json", an_json, "JSON output");
    an->add_flag("--text", an_text, "text output (default)");
    an->add_option("--eps", an_eps, "chordal point-identity tolerance");

    // catalog
    auto* cat = app.add_subcommand("catalog", "list or show named surfaces");
    auto* cat_list = cat->add_subcommand("list", "list catalog entries");
    SurfaceOptions show_opt;
    auto* cat_show = cat->add_subcommand("show", "print a catalog surface as JSON");
    add_surface_options(cat_show, show_opt);

    // mesh
    SurfaceOptions mesh_opt;
    GridSpec grid;
    std::string mesh_out = "mesh.obj", mesh_ply, center_str = "0,0", basepoint_str;
    auto* me = app.add_subcommand("mesh", "integrate the representation formula to a mesh");
    add_surface_options(me, mesh_opt, true);
    me->add_option("--center", center_str, "annulus center re,im");
    me->add_option("--rmin", grid.rmin, "inner radius");
    me->add_option("--rmax", grid.rmax, "outer radius");
    me->add_option("--nr", grid.nr, "radial cells");
    me->add_option("--ntheta", grid.ntheta, "angular cells");
    me->add_option("--delta", grid.delta_path, "pole exclusion radius");
    me->add_option("--tol", grid.rel_tol, "edge quadrature tolerance");
    me->add_option("--out", mesh_out, "OBJ output path");
    me->add_option("--ply", mesh_ply, "optional PLY output path");
    me->add_option("--basepoint", basepoint_str, "integration basepoint re,im");

    // periods
    SurfaceOptions per_opt;
    std::string cycle_path;
    bool per_standard = false;
    auto* pe = app.add_subcommand("periods", "contour integrals of the phi-triple");
    add_surface_options(pe, per_opt, true);
    pe->add_option("--cycle", cycle_path, "cycle JSON file");
    pe->add_flag("--standard", per_standard, "use loops around the punctures");

    // covering
    SurfaceOptions cov_opt;
    std::string cover_path;
    auto* co = app.add_subcommand("covering", "push (G,k,d) through an unbranched cover");
    add_surface_options(co, cov_opt);
    co->add_option("--spec", cover_path, "cover spec JSON file")->required();

    // unicity
    std::string uni_a, uni_b;
    auto* un = app.add_subcommand("unicity", "shared-fiber value scan for two surfaces");
    un->add_option("surface1", uni_a, "first surface JSON file or @name")->required();
    un->add_option("surface2", uni_b, "second surface JSON file or @name")->required();

    // nevanlinna
    std::string nev_mode, nev_punctures, nev_rs = "0.5,0.7,0.9", nev_out;
    auto* ne = app.add_subcommand("nevanlinna", "disk characteristic estimates");
    ne->add_option("mode", nev_mode, "voss3")->required();
    ne->add_option("--punctures", nev_punctures, "three punctures JSON file");
    ne->add_option("--r", nev_rs, "comma-separated radii in (0,1)");
    ne->add_option("--out", nev_out, "CSV output path");

    // totalcurv
    SurfaceOptions tc_opt;
    double truncate = 0.0;
    auto* tc = app.add_subcommand("totalcurv", "total curvature or divergence report");
    add_surface_options(tc, tc_opt, true);
    tc->add_option("--truncate", truncate, "integrate the chart disk |z| <= R only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*an) {
            const auto S = load_surface(an_opt);
            AnalyzeOptions opt;
            opt.eps = an_eps;
            const auto r = analyze(S, opt);
            if (an_json)
                std::cout << report_to_json_text(r) << "\n";
            else
                std::cout << report_to_text_table(S, r);
            return r.all_ok() ? 0 : 1;
        }
        if (*cat) {
            if (*cat_list) {
                for (const auto& e : catalog_entries())
                    std::printf("%-14s %s\n", e.name.c_str(), e.summary.c_str());
                return 0;
            }
            if (*cat_show) {
                const auto S = load_surface(show_opt);
                std::cout << surface_to_json_text(S) << "\n";
                return 0;
            }
            std::cerr << "catalog needs 'list' or 'show'\n";
            return 2;
        }
        if (*me) {
            const auto S = load_surface(mesh_opt);
            auto parse_pt = [](const std::string& s) {
                const auto comma = s.find(',');
                if (comma == std::string::npos) throw input_error("points are re,im");
                return Complex{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
            };
            grid.center = parse_pt(center_str);
            const Complex basepoint =
                basepoint_str.empty() ? grid.center + Complex{0.5 * (grid.rmin + grid.rmax), 0.0}
                                      : parse_pt(basepoint_str);
            const auto mr = integrate_surface(S, grid, basepoint);
            write_obj(mr.mesh, mesh_out);
            if (!mesh_ply.empty()) write_ply(mr.mesh, mesh_ply);
            std::printf("vertices %zu, quads %zu, dropped %d\n", mr.mesh.vertices.size(),
                        mr.mesh.quads.size(), mr.dropped);
            std::printf("max face defect %.3e\n", mr.max_face_defect);
            double seam = 0.0;
            for (double s : mr.seam_defect)
                if (std::isfinite(s)) seam = std::max(seam, s);
            std::printf("max seam period %.3e\n", seam);
            return 0;
        }
        if (*pe) {
            const auto S = load_surface(per_opt);
            std::vector<Cycle> cycles;
            if (per_standard || cycle_path.empty())
                cycles = standard_cycles(S);
            else
                cycles = cycles_from_json_file(cycle_path);
            std::cout << periods_to_json_text(periods(S, cycles)) << "\n";
            return 0;
        }
        if (*co) {
            const auto S = load_surface(cov_opt);
            const auto spec = cover_spec_from_json_file(cover_path);
            const auto res =
                cover_pushforward(S.genus(), S.puncture_count(), S.gauss_degree(), spec);
            std::cout << cover_result_to_json_text(res) << "\n";
            return res.ratio_invariant ? 0 : 1;
        }
        if (*un) {
            const auto s1 = load_surface({uni_a});
            const auto s2 = load_surface({uni_b});
            const auto rep = unicity_scan(s1, s2);
            std::cout << unicity_to_json_text(rep) << "\n";
            return (rep.q_ok && rep.delta_ok) ? 0 : 1;
        }
        if (*ne) {
            if (nev_mode != "voss3") throw input_error("the only implemented mode is voss3");
            std::array<SpherePoint, 3> punct{SpherePoint::finite(0.0), SpherePoint::finite(1.0),
                                             SpherePoint::infinity()};
            if (!nev_punctures.empty()) punct = three_punctures_from_json_file(nev_punctures);
            const auto rep = characteristic_voss3(punct, parse_r_list(nev_rs));
            std::ostringstream csv;
            csv << "r,T,bound,slack,eta_fit\n";
            for (const auto& s : rep.samples)
                csv << s.r << "," << s.T << "," << s.bound << "," << s.slack << "," << rep.eta_fit
                    << "\n";
            if (nev_out.empty()) {
                std::cout << csv.str();
            } else {
                std::ofstream out(nev_out);
                if (!out.good()) throw input_error("cannot write '" + nev_out + "'");
                out << csv.str();
            }
            for (const auto& s : rep.samples)
                if (!s.reliable) return 3;
            return 0;
        }
        if (*tc) {
            const auto S = load_surface(tc_opt);
            std::optional<double> trunc;
            if (truncate > 0.0) trunc = truncate;
            const auto rep = total_curvature(S, 1e-4, trunc);
            std::cout << total_curvature_to_json_text(rep) << "\n";
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const check_error& e) {
        std::cerr << "check violated: " << e.what() << "\n";
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
