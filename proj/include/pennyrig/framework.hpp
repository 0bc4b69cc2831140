#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pennyrig/graph.hpp"

namespace pennyrig {

// Numeric thresholds used across the geometric operations. All distances are
// in units of the common sphere diameter (contacts are at distance exactly 1).
struct Tolerances {
    double edge = 1e-9;        // |dist - 1| allowed on edges
    double separation = 0.0;   // non-edges must satisfy dist > 1 + separation
    double congruence = 1e-7;  // coordinate tolerance after canonical alignment
    double rank = 1e-8;        // relative singular-value cutoff for rank
};

// A graph together with a placement of its vertices in R^d. Row v of `coords`
// is the position of graph.vertices()[v].
class Framework {
  public:
    Framework() = default;
    Framework(Graph graph, int dimension, Eigen::MatrixXd coords);

    const Graph& graph() const { return graph_; }
    int dimension() const { return dimension_; }
    const Eigen::MatrixXd& coords() const { return coords_; }
    Eigen::RowVectorXd position(int v) const { return coords_.row(v); }
    double distance(int u, int v) const {
        return (coords_.row(u) - coords_.row(v)).norm();
    }

    // Same graph and dimension, new coordinates.
    Framework with_coords(Eigen::MatrixXd coords) const;
    // Embed into a higher dimension by appending zero coordinates.
    Framework lifted(int new_dimension) const;
    // Mirror image: negate the last coordinate.
    Framework mirrored() const;

  private:
    Graph graph_;
    int dimension_ = 0;
    Eigen::MatrixXd coords_;
};

// --- validation -------------------------------------------------------------

enum class ViolationKind {
    EdgeNotUnit,     // an edge's endpoint distance is not 1 (within tol.edge)
    NonEdgeOverlap,  // two non-adjacent spheres overlap (dist <= 1 - tol.edge)
    NonEdgeTouching, // non-adjacent spheres touch without being an edge
};

struct Violation {
    ViolationKind kind;
    Vertex a, b;
    double distance = 0.0;
    bool warning = false; // true exactly for NonEdgeTouching
};

struct ValidationReport {
    bool valid = false;
    std::vector<Violation> violations; // hard violations and warnings, mixed

    bool has_hard_violation() const {
        for (const auto& v : violations) {
            if (!v.warning) return true;
        }
        return false;
    }
};

// Checks that the placement realizes the graph as a unit-sphere contact
// arrangement: edges at distance 1, non-edges strictly farther than
// 1 + tol.separation. Non-edges that land in (1 - tol.edge, 1 + tol.separation]
// are reported as touching warnings; they still make the framework invalid
// (with the default tol.separation = 0, spheres that touch must be edges).
ValidationReport validate_sphere(const Framework& f, const Tolerances& tol = {});

// --- infinitesimal rigidity -------------------------------------------------

// |E| x (d |V|) matrix: the row of edge (u, v) holds (p_u - p_v) in u's
// column block and (p_v - p_u) in v's, zeros elsewhere. Rows follow the
// graph's sorted edge order.
Eigen::MatrixXd rigidity_matrix(const Framework& f);

struct InfinitesimalRigidityReport {
    bool rigid = false;
    int rank = 0;
    int target_rank = 0; // d |V| - d(d+1)/2
};

// Rank test of the rigidity matrix against the full-rigidity target. The
// placement must affinely span R^d (throws Error(DegenerateSpan) otherwise).
InfinitesimalRigidityReport infinitesimally_rigid(const Framework& f,
                                                  const Tolerances& tol = {});

// --- comparing placements ---------------------------------------------------

// Same graph and same edge lengths within tol.edge. Throws
// Error(GraphMismatch) when the two graphs differ.
bool equivalent(const Framework& f1, const Framework& f2,
                const Tolerances& tol = {});

// Deterministic representative of the congruence-with-fixed-orientation class:
// the first vertex (in sorted label order) moves to the origin and the
// following vertices fix the axes one by one (first independent direction on
// +x, next in the upper half of the xy-plane, and so on). Works for any
// affine span; coordinates outside the span come back as zeros.
Framework canonical_form(const Framework& f);

// True when some isometry of R^d (rotations, reflections, translations) maps
// f1's placement onto f2's, vertex by vertex, within tol.congruence in the
// coordinate infinity-norm after canonical alignment. Throws
// Error(GraphMismatch) when the graphs differ.
bool congruent(const Framework& f1, const Framework& f2,
               const Tolerances& tol = {});

// --- separator flexes -------------------------------------------------------

// A one-parameter motion that rotates one side of a small vertex separator
// rigidly about the separator while the rest stays put.
struct FlexWitness {
    std::vector<int> rotating;      // vertex indices moved by the flex
    Eigen::VectorXd axis_point;     // a point on the rotation axis
    Eigen::VectorXd axis_direction; // unit axis direction (used when d == 3)
    double angle_min = 0.0;         // open interval of admissible angles
    double angle_max = 0.0;
};

// Builds a flex witness from a cover V1, V2 of the vertex set whose induced
// sides contain every edge and whose overlap S = V1 and V2 has at most d-1
// affinely independent points. Rotating V1 minus S about S preserves every
// edge length for all angles. Throws Error(PreconditionFailed) naming the
// violated hypothesis.
FlexWitness flex_witness_from_separator(const Framework& f,
                                        const std::vector<Vertex>& side1,
                                        const std::vector<Vertex>& side2);

// Applies the witness at a given angle (radians).
Framework apply_flex(const Framework& f, const FlexWitness& w, double angle);

} // namespace pennyrig
