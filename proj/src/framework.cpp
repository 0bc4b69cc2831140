#include "pennyrig/framework.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/SVD>

namespace pennyrig {

Framework::Framework(Graph graph, int dimension, Eigen::MatrixXd coords)
    : graph_(std::move(graph)), dimension_(dimension), coords_(std::move(coords)) {
    if (dimension_ < 1) {
        throw Error(ErrorKind::PreconditionFailed, "framework: dimension must be >= 1");
    }
    if (coords_.rows() != graph_.vertex_count() || coords_.cols() != dimension_) {
        throw Error(ErrorKind::PreconditionFailed,
                    "framework: coordinate matrix must be |V| x d");
    }
    if (!coords_.allFinite()) {
        throw Error(ErrorKind::PreconditionFailed,
                    "framework: coordinates must be finite");
    }
}

Framework Framework::with_coords(Eigen::MatrixXd coords) const {
    return Framework(graph_, dimension_, std::move(coords));
}

Framework Framework::lifted(int new_dimension) const {
    if (new_dimension < dimension_) {
        throw Error(ErrorKind::PreconditionFailed,
                    "lifted: target dimension is smaller than current");
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(coords_.rows(), new_dimension);
    m.leftCols(dimension_) = coords_;
    return Framework(graph_, new_dimension, std::move(m));
}

Framework Framework::mirrored() const {
    Eigen::MatrixXd m = coords_;
    m.col(dimension_ - 1) *= -1.0;
    return Framework(graph_, dimension_, std::move(m));
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

ValidationReport validate_sphere(const Framework& f, const Tolerances& tol) {
    ValidationReport report;
    const Graph& g = f.graph();
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            double dist = f.distance(u, v);
            if (g.has_edge(u, v)) {
                if (std::abs(dist - 1.0) > tol.edge) {
                    report.violations.push_back(
                        {ViolationKind::EdgeNotUnit, g.label(u), g.label(v), dist, false});
                }
            } else {
                if (dist <= 1.0 - tol.edge) {
                    report.violations.push_back(
                        {ViolationKind::NonEdgeOverlap, g.label(u), g.label(v), dist, false});
                } else if (dist <= 1.0 + tol.separation) {
                    // Touching band: close enough to count as a contact but not
                    // an edge. Flagged as a warning; still invalidates.
                    report.violations.push_back(
                        {ViolationKind::NonEdgeTouching, g.label(u), g.label(v), dist, true});
                }
            }
        }
    }
    report.valid = report.violations.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Infinitesimal rigidity
// ---------------------------------------------------------------------------

Eigen::MatrixXd rigidity_matrix(const Framework& f) {
    const Graph& g = f.graph();
    int d = f.dimension();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.edge_count(), d * g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        Eigen::RowVectorXd diff = f.position(u) - f.position(v);
        m.block(e, d * u, 1, d) = diff;
        m.block(e, d * v, 1, d) = -diff;
    }
    return m;
}

namespace {

// Affine dimension of the point set: rank of the vertex differences.
int affine_span_dimension(const Eigen::MatrixXd& coords, double rel_tol) {
    int n = static_cast<int>(coords.rows());
    if (n <= 1) return 0;
    Eigen::MatrixXd diffs(n - 1, coords.cols());
    for (int v = 1; v < n; ++v) diffs.row(v - 1) = coords.row(v) - coords.row(0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
    double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    if (top <= 0.0) return 0;
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > rel_tol * top) ++rank;
    }
    return rank;
}

int numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    double top = svd.singularValues()(0);
    if (top <= 0.0) return 0;
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > rel_tol * top) ++rank;
    }
    return rank;
}

} // namespace

InfinitesimalRigidityReport infinitesimally_rigid(const Framework& f,
                                                  const Tolerances& tol) {
    int d = f.dimension();
    int n = f.graph().vertex_count();
    if (affine_span_dimension(f.coords(), tol.rank) < d) {
        throw Error(ErrorKind::DegenerateSpan,
                    "infinitesimally_rigid: coordinates do not affinely span "
                    "dimension " + std::to_string(d));
    }
    InfinitesimalRigidityReport report;
    report.target_rank = d * n - d * (d + 1) / 2;
    report.rank = numeric_rank(rigidity_matrix(f), tol.rank);
    report.rigid = report.rank == report.target_rank;
    return report;
}

// ---------------------------------------------------------------------------
// Equivalence and congruence
// ---------------------------------------------------------------------------

namespace {

void require_same_graph(const Framework& f1, const Framework& f2, const char* op) {
    if (f1.graph().vertices() != f2.graph().vertices() ||
        f1.graph().edges() != f2.graph().edges()) {
        throw Error(ErrorKind::GraphMismatch,
                    std::string(op) + ": frameworks have different graphs");
    }
    if (f1.dimension() != f2.dimension()) {
        throw Error(ErrorKind::GraphMismatch,
                    std::string(op) + ": frameworks have different dimensions");
    }
}

} // namespace

bool equivalent(const Framework& f1, const Framework& f2, const Tolerances& tol) {
    require_same_graph(f1, f2, "equivalent");
    for (const auto& [u, v] : f1.graph().edges()) {
        if (std::abs(f1.distance(u, v) - f2.distance(u, v)) > tol.edge) return false;
    }
    return true;
}

Framework canonical_form(const Framework& f) {
    int n = f.graph().vertex_count();
    int d = f.dimension();
    if (n == 0) return f;

    // Translate the first vertex (sorted label order) to the origin, then walk
    // the remaining vertices in order, extracting an orthonormal frame by
    // Gram-Schmidt. Each frame vector gets a positive coordinate for the
    // vertex that introduced it, which fixes rotations and reflections
    // deterministically as far as the point set pins them down at all.
    Eigen::MatrixXd p = f.coords();
    Eigen::RowVectorXd origin = p.row(0);
    for (int v = 0; v < n; ++v) p.row(v) -= origin;

    const double gate = 1e-6;
    std::vector<Eigen::VectorXd> basis;
    for (int v = 1; v < n && static_cast<int>(basis.size()) < d; ++v) {
        Eigen::VectorXd r = p.row(v).transpose();
        for (const auto& e : basis) r -= e.dot(r) * e;
        if (r.norm() > gate) basis.push_back(r.normalized());
    }
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, d);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
            q(v, i) = p.row(v) * basis[i];
        }
    }
    return f.with_coords(std::move(q));
}

bool congruent(const Framework& f1, const Framework& f2, const Tolerances& tol) {
    require_same_graph(f1, f2, "congruent");
    Eigen::MatrixXd a = canonical_form(f1).coords();
    Eigen::MatrixXd direct = canonical_form(f2).coords();
    Eigen::MatrixXd flipped = canonical_form(f2.mirrored()).coords();
    double err_direct = (a - direct).cwiseAbs().maxCoeff();
    double err_flipped = (a - flipped).cwiseAbs().maxCoeff();
    return std::min(err_direct, err_flipped) <= tol.congruence;
}

// ---------------------------------------------------------------------------
// Separator flexes
// ---------------------------------------------------------------------------

namespace {

std::set<int> to_index_set(const Graph& g, const std::vector<Vertex>& labels) {
    std::set<int> out;
    for (const auto& l : labels) out.insert(g.index_of(l));
    return out;
}

} // namespace

FlexWitness flex_witness_from_separator(const Framework& f,
                                        const std::vector<Vertex>& side1,
                                        const std::vector<Vertex>& side2) {
    const Graph& g = f.graph();
    int d = f.dimension();
    std::set<int> s1 = to_index_set(g, side1);
    std::set<int> s2 = to_index_set(g, side2);

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!s1.count(v) && !s2.count(v)) {
            throw Error(ErrorKind::PreconditionFailed,
                        "flex witness: sides must cover every vertex; missing " +
                            g.label(v));
        }
    }
    for (const auto& [u, v] : g.edges()) {
        bool in1 = s1.count(u) && s1.count(v);
        bool in2 = s2.count(u) && s2.count(v);
        if (!in1 && !in2) {
            throw Error(ErrorKind::PreconditionFailed,
                        "flex witness: edge " + g.label(u) + " -- " + g.label(v) +
                            " crosses the separator");
        }
    }
    std::vector<int> separator;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                          std::back_inserter(separator));
    if (static_cast<int>(separator.size()) > d - 1) {
        throw Error(ErrorKind::PreconditionFailed,
                    "flex witness: separator has " + std::to_string(separator.size()) +
                        " vertices, at most " + std::to_string(d - 1) + " allowed");
    }
    if (separator.size() >= 2) {
        Eigen::MatrixXd pts(separator.size(), d);
        for (std::size_t i = 0; i < separator.size(); ++i) {
            pts.row(i) = f.position(separator[i]);
        }
        if (affine_span_dimension(pts, 1e-9) !=
            static_cast<int>(separator.size()) - 1) {
            throw Error(ErrorKind::PreconditionFailed,
                        "flex witness: separator points are affinely dependent");
        }
    }
    for (const auto* side : {&s1, &s2}) {
        Eigen::MatrixXd pts(side->size(), d);
        int i = 0;
        for (int v : *side) pts.row(i++) = f.position(v);
        if (affine_span_dimension(pts, 1e-9) < d - 1) {
            throw Error(ErrorKind::PreconditionFailed,
                        "flex witness: a side's affine span has dimension below " +
                            std::to_string(d - 1));
        }
    }

    FlexWitness w;
    for (int v : s1) {
        if (!std::binary_search(separator.begin(), separator.end(), v)) {
            w.rotating.push_back(v);
        }
    }
    w.angle_min = -M_PI;
    w.angle_max = M_PI;
    w.axis_point = separator.empty()
                       ? Eigen::VectorXd::Zero(d).eval()
                       : Eigen::VectorXd(f.position(separator[0]).transpose());
    if (d >= 3) {
        if (separator.size() >= 2) {
            Eigen::VectorXd dir =
                (f.position(separator[1]) - f.position(separator[0])).transpose();
            w.axis_direction = dir.normalized();
        } else {
            w.axis_direction = Eigen::VectorXd::Unit(d, 0);
        }
    } else {
        w.axis_direction = Eigen::VectorXd::Zero(d);
    }
    return w;
}

Framework apply_flex(const Framework& f, const FlexWitness& w, double angle) {
    int d = f.dimension();
    Eigen::MatrixXd p = f.coords();
    if (d == 2) {
        double c = std::cos(angle), s = std::sin(angle);
        for (int v : w.rotating) {
            Eigen::Vector2d rel = p.row(v).transpose() - w.axis_point.head(2);
            p.row(v) = (w.axis_point.head(2) +
                        Eigen::Vector2d(c * rel.x() - s * rel.y(),
                                        s * rel.x() + c * rel.y()))
                           .transpose();
        }
    } else if (d == 3) {
        Eigen::Vector3d axis = w.axis_direction.head(3);
        Eigen::Matrix3d rot = Eigen::AngleAxisd(angle, axis).toRotationMatrix();
        for (int v : w.rotating) {
            Eigen::Vector3d rel = p.row(v).transpose() - w.axis_point.head(3);
            p.row(v) = (w.axis_point.head(3) + rot * rel).transpose();
        }
    } else {
        throw Error(ErrorKind::DimensionUnsupported,
                    "apply_flex: only d = 2 and d = 3 are supported");
    }
    return f.with_coords(std::move(p));
}

} // namespace pennyrig
