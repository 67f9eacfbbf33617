#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horolab/geometry.hpp"

namespace horolab {

enum class DomainKind {
    UnitDisc,
    EuclideanBall,
    Polydisc,
    SlitDisc,
    HalfDisc,
    ConvexPolygon,
    LatticeDiscComplement,
    TakagiDomain,
    PuncturedBall,
};

std::string kind_name(DomainKind k);

// Truncated blancmange sum, 1-periodic, tail bound 2^{1-depth}.
double takagi(double t, int depth = 52);

class DomainDescriptor;

// A boundary point together with an admissible inward direction. Two-sided
// points (the slit) carry a side_tag and are emitted once per side.
struct BoundaryPoint {
    CPoint coords;
    CPoint inward;           // unit vector; admissible cone direction at corners
    std::string side_tag;    // "", "above", "below"
    int component_id = 0;
    double step0 = 0.5;      // x + t*inward is interior for t in (0, step0]
};

enum class SchemeType { Normal, Cone, TangentialArc, Lopsided };

struct ApproachScheme {
    SchemeType type = SchemeType::Normal;
    double angle = 0.0;  // Cone only
    int component = 0;   // Lopsided only: which coordinate approaches faster
    std::string name() const;
};

// Immutable description of a model domain: membership, boundary distance,
// boundary sampling, approach sequences. All operations are pure.
class DomainDescriptor {
  public:
    static DomainDescriptor unit_disc();
    static DomainDescriptor euclidean_ball(int dim);
    static DomainDescriptor polydisc(int dim);
    static DomainDescriptor slit_disc();
    static DomainDescriptor half_disc();
    static DomainDescriptor convex_polygon(std::vector<Complex> vertices);
    static DomainDescriptor lattice_disc_complement(Window window);
    static DomainDescriptor takagi_domain(int depth = 52);
    static DomainDescriptor punctured_ball(int dim, CPoint puncture);

    DomainKind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool bounded() const { return bounded_; }
    bool convex() const;
    bool planar() const { return dim_ == 1; }
    const Window& window() const { return window_; }
    const std::vector<Complex>& polygon_vertices() const { return vertices_; }
    const CPoint& puncture() const { return puncture_; }

    bool contains(const CPoint& p) const;
    bool contains(Complex z) const { return contains(CPoint{z}); }

    // Euclidean distance from an interior point to the complement.
    double boundary_distance(const CPoint& p) const;
    double boundary_distance(Complex z) const { return boundary_distance(CPoint{z}); }

    std::vector<BoundaryPoint> sample_boundary(int count, uint64_t seed) const;

    // Interior points converging to x with geometric ratio 1/2 (Lopsided:
    // ratio 1/4 in the chosen coordinate). Truncated once the boundary
    // distance falls below 1e-12.
    std::vector<CPoint> approach_sequence(const BoundaryPoint& x,
                                          const ApproachScheme& scheme, int n) const;

    // Boundary point at a given location with a default inward direction;
    // convenience for the model kinds where the normal is obvious.
    BoundaryPoint boundary_point(const CPoint& coords, const std::string& side_tag = "") const;
    BoundaryPoint boundary_point(Complex z, const std::string& side_tag = "") const {
        return boundary_point(CPoint{z}, side_tag);
    }

    std::string to_json_string() const;

  private:
    DomainDescriptor() = default;

    DomainKind kind_ = DomainKind::UnitDisc;
    int dim_ = 1;
    bool bounded_ = true;
    Window window_{};
    std::vector<Complex> vertices_;   // ConvexPolygon, CCW
    CPoint puncture_;                 // PuncturedBall
    int takagi_depth_ = 52;
    std::vector<Complex> takagi_graph_;  // cached polyline of the graph
};

}  // namespace horolab
