#pragma once

#include <schemadraw/peel.hpp>
#include <schemadraw/verify.hpp>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace schemadraw {

// Boundary placement for the stretch drawing: schema corners on a regular
// 4g-gon, every side vertex on its carrier segment at exact rational equal
// subdivision. The genus one square is exactly regular; higher genus
// corners round cos/sin to the nearest representable value, so corner
// regularity holds to double precision while every side carrier and its
// subdivision stay exact.
struct FrameLayout {
    std::vector<Point<BigRational>> corners;
    std::vector<Point<BigRational>> pos;
    std::vector<char> on_frame;
    std::vector<double> spacing;
};

inline FrameLayout frame_polygon(const CutResult& cut, double radius = 1.0) {
    const int m = static_cast<int>(cut.sides.size());
    if (m < 4 || m % 4 != 0) throw Error("stretch: the cut must have 4g sides");
    if (!(radius > 0)) throw Error("stretch: the frame radius must be positive");
    for (int s = 0; s < m; ++s)
        if (cut.sides[s].vertices.back() != cut.sides[(s + 1) % m].vertices.front())
            throw Error("stretch: sides do not chain");

    FrameLayout f;
    f.corners.resize(m);
    if (m == 4) {
        const BigRational h{radius / std::sqrt(2.0)};
        f.corners[0] = {h, h};
        f.corners[1] = {-h, h};
        f.corners[2] = {-h, -h};
        f.corners[3] = {h, -h};
    } else {
        const double pi = std::acos(-1.0);
        for (int i = 0; i < m; ++i) {
            const double a = pi * (2 * i + 1) / m;
            f.corners[i] = {BigRational{radius * std::cos(a)},
                            BigRational{radius * std::sin(a)}};
        }
    }

    f.pos.assign(cut.star.vertex_count, Point<BigRational>{});
    f.on_frame.assign(cut.star.vertex_count, 0);
    f.spacing.resize(m);
    for (int s = 0; s < m; ++s) {
        const std::vector<int>& vs = cut.sides[s].vertices;
        const Point<BigRational>& a = f.corners[s];
        const Point<BigRational>& b = f.corners[(s + 1) % m];
        const int k = static_cast<int>(vs.size());
        if (k < 2) throw Error("stretch: a side has fewer than two vertices");
        for (int j = 0; j < k; ++j) {
            const BigRational t{j, k - 1};
            f.pos[vs[j]] = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
            f.on_frame[vs[j]] = 1;
        }
        f.spacing[s] =
            std::hypot(to_double(b.x - a.x), to_double(b.y - a.y)) / (k - 1);
    }
    return f;
}

enum class SolveMode { automatic, exact, iterative };

// Positions satisfying the barycentric condition: every off-frame vertex at
// the average of its neighbors. exact_pos is filled by the rational
// backend; pos always holds double coordinates.
struct TutteSolution {
    std::vector<Point<BigRational>> exact_pos;
    std::vector<Point<double>> pos;
    double max_residual = 0;
    bool exact = false;
};

namespace detail {

inline std::vector<int> stretch_interior(const CombinatorialMap& g,
                                         const std::vector<char>& on_frame) {
    if (static_cast<int>(on_frame.size()) != g.vertex_count)
        throw Error("stretch: frame flags have the wrong size");
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> queue;
    for (int v = 0; v < g.vertex_count; ++v)
        if (on_frame[v]) {
            seen[v] = 1;
            queue.push_back(v);
        }
    if (queue.empty()) throw Error("stretch: the frame fixes no vertex");
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int d : g.rotation(v))
            if (!seen[g.head(d)]) {
                seen[g.head(d)] = 1;
                queue.push_back(g.head(d));
            }
    }
    std::vector<int> interior;
    for (int v = 0; v < g.vertex_count; ++v)
        if (!on_frame[v]) {
            if (!seen[v]) throw Error("stretch: the interior does not reach the frame");
            interior.push_back(v);
        }
    return interior;
}

inline std::vector<Point<BigRational>> tutte_exact(const CombinatorialMap& g,
                                                   const FrameLayout& frame) {
    const std::vector<int> interior = stretch_interior(g, frame.on_frame);
    const int m = static_cast<int>(interior.size());
    std::vector<int> col(g.vertex_count, -1);
    for (int i = 0; i < m; ++i) col[interior[i]] = i;

    std::vector<std::vector<BigRational>> A(m, std::vector<BigRational>(m + 2));
    for (int i = 0; i < m; ++i) {
        const int v = interior[i];
        A[i][i] = g.degree(v);
        for (int d : g.rotation(v)) {
            const int u = g.head(d);
            if (col[u] >= 0) {
                A[i][col[u]] -= 1;
            } else {
                A[i][m] += frame.pos[u].x;
                A[i][m + 1] += frame.pos[u].y;
            }
        }
    }

    for (int c = 0; c < m; ++c) {
        int p = -1;
        for (int r = c; r < m && p < 0; ++r)
            if (A[r][c] != 0) p = r;
        if (p < 0) throw Error("stretch: the barycentric system is singular");
        if (p != c) std::swap(A[c], A[p]);
        for (int r = c + 1; r < m; ++r) {
            if (A[r][c] == 0) continue;
            const BigRational f = A[r][c] / A[c][c];
            for (int k = c; k < m + 2; ++k) A[r][k] -= f * A[c][k];
        }
    }

    std::vector<Point<BigRational>> pos(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v)
        if (frame.on_frame[v]) pos[v] = frame.pos[v];
    for (int c = m - 1; c >= 0; --c) {
        BigRational sx = A[c][m];
        BigRational sy = A[c][m + 1];
        for (int k = c + 1; k < m; ++k) {
            sx -= A[c][k] * pos[interior[k]].x;
            sy -= A[c][k] * pos[interior[k]].y;
        }
        pos[interior[c]] = {sx / A[c][c], sy / A[c][c]};
    }

    for (int v : interior) {
        BigRational sx = 0, sy = 0;
        for (int d : g.rotation(v)) {
            sx += pos[g.head(d)].x;
            sy += pos[g.head(d)].y;
        }
        if (sx != pos[v].x * g.degree(v) || sy != pos[v].y * g.degree(v))
            throw Error("stretch: exact solve lost the barycentric identity");
    }
    return pos;
}

inline double barycentric_residual(const CombinatorialMap& g,
                                   const std::vector<char>& on_frame,
                                   const std::vector<Point<double>>& pos) {
    double worst = 0.0;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (on_frame[v]) continue;
        double sx = 0, sy = 0;
        int deg = 0;
        for (int d : g.rotation(v)) {
            sx += pos[g.head(d)].x;
            sy += pos[g.head(d)].y;
            ++deg;
        }
        worst = std::max(worst, std::abs(pos[v].x - sx / deg));
        worst = std::max(worst, std::abs(pos[v].y - sy / deg));
    }
    return worst;
}

inline std::vector<Point<double>> tutte_iterative(const CombinatorialMap& g,
                                                  const FrameLayout& frame, double tol) {
    const std::vector<int> interior = stretch_interior(g, frame.on_frame);
    const int m = static_cast<int>(interior.size());
    std::vector<int> col(g.vertex_count, -1);
    for (int i = 0; i < m; ++i) col[interior[i]] = i;

    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd bx = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd by = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) {
        const int v = interior[i];
        trip.emplace_back(i, i, static_cast<double>(g.degree(v)));
        for (int d : g.rotation(v)) {
            const int u = g.head(d);
            if (col[u] >= 0) {
                trip.emplace_back(i, col[u], -1.0);
            } else {
                bx[i] += to_double(frame.pos[u].x);
                by[i] += to_double(frame.pos[u].y);
            }
        }
    }
    Eigen::SparseMatrix<double> A(m, m);
    A.setFromTriplets(trip.begin(), trip.end());

    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
    cg.setTolerance(tol * 1e-3);
    cg.setMaxIterations(1000 + 50LL * m);
    cg.compute(A);
    Eigen::VectorXd x = cg.solve(bx);
    if (cg.info() != Eigen::Success) throw Error("stretch: the solver did not converge");
    Eigen::VectorXd y = cg.solve(by);
    if (cg.info() != Eigen::Success) throw Error("stretch: the solver did not converge");

    std::vector<Point<double>> pos(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v)
        if (frame.on_frame[v]) pos[v] = {to_double(frame.pos[v].x), to_double(frame.pos[v].y)};
    for (int i = 0; i < m; ++i) pos[interior[i]] = {x[i], y[i]};
    return pos;
}

} // namespace detail

inline TutteSolution tutte_solve(const CombinatorialMap& g, const FrameLayout& frame,
                                 double tol = 1e-9,
                                 SolveMode mode = SolveMode::automatic) {
    const bool exact =
        mode == SolveMode::exact || (mode == SolveMode::automatic && g.vertex_count <= 300);
    TutteSolution out;
    if (exact) {
        out.exact_pos = detail::tutte_exact(g, frame);
        out.pos.resize(g.vertex_count);
        for (int v = 0; v < g.vertex_count; ++v)
            out.pos[v] = {to_double(out.exact_pos[v].x), to_double(out.exact_pos[v].y)};
        out.exact = true;
        out.max_residual = 0.0;
    } else {
        out.pos = detail::tutte_iterative(g, frame, tol);
        out.max_residual = detail::barycentric_residual(g, frame.on_frame, out.pos);
        if (!(out.max_residual <= tol)) throw Error("stretch: the solver did not converge");
    }
    return out;
}

// Straight-line drawing in the regular polygon frame. The exact backend
// fills exact and its mirror in real; the iterative backend fills real
// only. coord_bits is the largest numerator-plus-denominator bit count over
// exact coordinates in lowest terms; close_pairs lists distinct vertices
// drawn coincident (exact) or closer than the separation threshold (real).
struct StretchDrawing {
    ExactDrawing exact;
    RealDrawing real;
    bool is_exact = false;
    double max_residual = 0;
    std::size_t coord_bits = 0;
    double max_abs_coord = 0;
    bool three_connected = false;
    bool three_connected_known = false;
    std::vector<std::pair<int, int>> close_pairs;
};

struct StretchOptions {
    double radius = 1.0;
    double tol = 1e-9;
    SolveMode mode = SolveMode::automatic;
    double separation = -1.0;
};

namespace detail {

// Internal 3-connectivity: the star plus an apex joined to every frame
// vertex must have no cut vertex and no separating pair. Pairs are found by
// deleting each vertex and looking for articulation points of the rest.
inline bool internally_three_connected(const CombinatorialMap& g,
                                       const std::vector<char>& on_frame) {
    const int n = g.vertex_count + 1;
    const int apex = g.vertex_count;
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int v = 0; v < g.vertex_count; ++v)
        for (int d : g.rotation(v)) adj[v].push_back({g.head(d), d >> 1});
    int next_id = g.edge_count();
    for (int v = 0; v < g.vertex_count; ++v)
        if (on_frame[v]) {
            adj[v].push_back({apex, next_id});
            adj[apex].push_back({v, next_id});
            ++next_id;
        }
    if (n < 4) return false;

    std::vector<int> tin(n), low(n), via(n);
    for (int skip = 0; skip < n; ++skip) {
        std::fill(tin.begin(), tin.end(), -1);
        int timer = 0;
        const int root = skip == 0 ? 1 : 0;
        bool cut = false;
        std::vector<std::pair<int, std::size_t>> stack = {{root, 0}};
        tin[root] = low[root] = timer++;
        via[root] = -1;
        int root_children = 0;
        while (!stack.empty() && !cut) {
            auto& [v, idx] = stack.back();
            if (idx < adj[v].size()) {
                const auto [u, eid] = adj[v][idx++];
                if (u == skip || eid == via[v]) continue;
                if (tin[u] >= 0) {
                    low[v] = std::min(low[v], tin[u]);
                    continue;
                }
                via[u] = eid;
                if (v == root) ++root_children;
                tin[u] = low[u] = timer++;
                stack.push_back({u, 0});
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    const int p = stack.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= tin[p]) cut = true;
                }
            }
        }
        if (cut || root_children > 1) return false;
        for (int v = 0; v < n; ++v)
            if (v != skip && tin[v] < 0) return false;
    }
    return true;
}

template <class T>
std::vector<std::pair<int, int>> close_vertex_pairs(const std::vector<Point<T>>& pos,
                                                    const T& sep) {
    std::vector<int> order(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pos[a].x != pos[b].x) return pos[a].x < pos[b].x;
        return pos[a].y < pos[b].y;
    });
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const auto& p = pos[order[i]];
            const auto& q = pos[order[j]];
            if (q.x - p.x > sep) break;
            T dy = q.y > p.y ? q.y - p.y : p.y - q.y;
            if (dy <= sep)
                out.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

inline StretchDrawing draw_peel_and_stretch(const CutResult& cut,
                                            const StretchOptions& opt = {}) {
    for (int s = 0; s < static_cast<int>(cut.sides.size()); ++s)
        if (!find_chords(cut, s).empty())
            throw Error("stretch: a side has a chord, refine the schema first");
    const FrameLayout frame = frame_polygon(cut, opt.radius);
    const TutteSolution sol = tutte_solve(cut.star, frame, opt.tol, opt.mode);
    const CombinatorialMap& g = cut.star;

    StretchDrawing out;
    out.is_exact = sol.exact;
    out.max_residual = sol.max_residual;

    out.real.vertex_count = g.vertex_count;
    out.real.pos = sol.pos;
    for (int e = 0; e < g.edge_count(); ++e)
        out.real.edges.push_back({g.vertex_of[2 * e], g.vertex_of[2 * e + 1]});
    for (const CutSide& side : cut.sides) out.real.frame.push_back(side.vertices);
    const auto rext = measure_grid(out.real);
    out.real.width = rext.width;
    out.real.height = rext.height;
    for (const auto& p : out.real.pos)
        out.max_abs_coord = std::max({out.max_abs_coord, std::abs(p.x), std::abs(p.y)});

    if (sol.exact) {
        out.exact.vertex_count = g.vertex_count;
        out.exact.pos = sol.exact_pos;
        out.exact.edges = out.real.edges;
        out.exact.frame = out.real.frame;
        const auto eext = measure_grid(out.exact);
        out.exact.width = eext.width;
        out.exact.height = eext.height;
        for (const auto& p : out.exact.pos)
            out.coord_bits = std::max({out.coord_bits, bit_length(p.x), bit_length(p.y)});
        out.close_pairs = detail::close_vertex_pairs(out.exact.pos, BigRational{0});
    } else {
        const double sep = opt.separation >= 0 ? opt.separation : opt.radius * 1e-12;
        out.close_pairs = detail::close_vertex_pairs(out.real.pos, sep);
    }

    if (g.vertex_count <= 3000) {
        out.three_connected = detail::internally_three_connected(g, frame.on_frame);
        out.three_connected_known = true;
    }
    return out;
}

} // namespace schemadraw
