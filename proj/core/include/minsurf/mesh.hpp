#pragma once

#include <string>

#include "minsurf/phi.hpp"

namespace minsurf {

struct SurfaceMesh {
    std::vector<Vec3> vertices;
    std::vector<Vec3> normals; // stereographic projection of g per vertex
    std::vector<std::array<int, 4>> quads;
};

struct GridSpec {
    Complex center{0.0, 0.0};
    double rmin = 0.1;
    double rmax = 1.0;
    int nr = 32;
    int ntheta = 64;
    double delta_path = 1e-2; // exclusion radius around poles and punctures
    double rel_tol = 1e-10;   // per-edge quadrature tolerance
};

/// Structured mesh plus the bookkeeping needed for quality metrics and
/// multi-valuedness reporting.
struct MeshResult {
    SurfaceMesh mesh;
    int nr = 0, ncirc = 0;
    bool torus_grid = false;
    double r0 = 0.0, dr = 0.0, dtheta = 0.0;
    Complex center{0.0, 0.0};
    std::vector<Complex> grid_z; // row-major (nr+1) x ncirc (torus: nr x ncirc)
    std::vector<int> vertex_of;  // grid index -> mesh vertex index or -1
    double max_face_defect = 0.0;
    std::vector<double> seam_defect; // per-ring period magnitude across the wrap
    int dropped = 0;

    int gindex(int i, int j) const { return i * ncirc + ((j % ncirc) + ncirc) % ncirc; }
};

/// Weierstrass-Enneper integration over a polar annulus grid (sphere chart)
/// or the fundamental square (torus): per-edge Gauss-Kronrod integrals
/// accumulated along a spanning tree, so the mesh is single-valued even when
/// the period condition fails; the failure shows up in seam_defect.
MeshResult integrate_surface(const WeierstrassSurface& S, const GridSpec& grid,
                             Complex basepoint);

struct MeshQuality {
    double harmonic_residual = 0.0; // max |discrete Laplacian of x|
    double isothermal_diff = 0.0;   // max ||x_u|-|x_v|| / (|x_u|+|x_v|)
    double isothermal_dot = 0.0;    // max |<x_u,x_v>| / (|x_u| |x_v|)
    double normal_error = 0.0;      // max |geometric normal - Gauss-map normal|
};
MeshQuality mesh_quality(const MeshResult& mr);

void write_obj(const SurfaceMesh& mesh, const std::string& path);
void write_ply(const SurfaceMesh& mesh, const std::string& path);

} // namespace minsurf
