#include "nichols/braiding.hpp"

#include "nichols/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace nichols {

MultiDegree MultiDegree::unit(int rank, int i)
{
    MultiDegree d(rank);
    d.v_[i] = 1;
    return d;
}

int MultiDegree::total() const
{
    return std::accumulate(v_.begin(), v_.end(), 0);
}

bool MultiDegree::is_zero() const
{
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

bool MultiDegree::is_nonnegative() const
{
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
}

bool MultiDegree::fits_in(const MultiDegree& bound) const
{
    for (int i = 0; i < rank(); ++i)
        if (v_[i] > bound.v_[i])
            return false;
    return true;
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& other)
{
    if (other.rank() != rank())
        throw std::invalid_argument("multidegree rank mismatch");
    for (int i = 0; i < rank(); ++i)
        v_[i] += other.v_[i];
    return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& other)
{
    if (other.rank() != rank())
        throw std::invalid_argument("multidegree rank mismatch");
    for (int i = 0; i < rank(); ++i)
        v_[i] -= other.v_[i];
    return *this;
}

MultiDegree operator*(int k, MultiDegree a)
{
    for (auto& x : a.v_)
        x *= k;
    return a;
}

std::strong_ordering operator<=>(const MultiDegree& a, const MultiDegree& b)
{
    if (auto c = a.total() <=> b.total(); c != 0)
        return c;
    return b.v_ <=> a.v_;
}

std::string MultiDegree::to_string() const
{
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < rank(); ++i)
        out << (i ? "," : "") << v_[i];
    out << ")";
    return out.str();
}

std::vector<MultiDegree> multidegrees_up_to(int rank, int total_bound)
{
    std::vector<MultiDegree> out;
    MultiDegree current(rank);
    std::function<void(int, int)> fill = [&](int pos, int remaining) {
        if (pos == rank) {
            out.push_back(current);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            current[pos] = k;
            fill(pos + 1, remaining - k);
        }
        current[pos] = 0;
    };
    fill(0, total_bound);
    std::sort(out.begin(), out.end());
    return out;
}

BraidingMatrix::BraidingMatrix(GroundField field, int rank)
    : field_(std::move(field)), rank_(rank), q_(rank * rank, Scalar::one(field_.M))
{
}

void BraidingMatrix::set(int i, int j, Scalar value)
{
    if (value.is_zero())
        throw InvalidOperand("braiding entries must be nonzero");
    q_[i * rank_ + j] = std::move(value);
}

BraidingMatrix BraidingMatrix::restricted(const std::vector<int>& vertices) const
{
    BraidingMatrix r(field_, static_cast<int>(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = 0; b < vertices.size(); ++b)
            r.q_[a * r.rank_ + b] = (*this)(vertices[a], vertices[b]);
    return r;
}

Scalar bicharacter(const BraidingMatrix& q, const MultiDegree& a, const MultiDegree& b)
{
    if (a.rank() != q.rank() || b.rank() != q.rank())
        throw std::invalid_argument("bicharacter: degree length does not match rank");
    Scalar result = Scalar::one(q.field().M);
    for (int i = 0; i < q.rank(); ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < q.rank(); ++j)
            if (b[j] != 0)
                result *= q(i, j).pow(static_cast<long>(a[i]) * b[j]);
    }
    return result;
}

std::optional<int> cartan_entry(const BraidingMatrix& q, int i, int j)
{
    if (i == j)
        throw std::invalid_argument("cartan_entry requires i != j");
    const Scalar& qii = q(i, i);
    const Scalar edge = q.edge(i, j);
    if (edge.is_one())
        return 0;
    if (auto order = qii.root_of_unity_order()) {
        Scalar power = Scalar::one(q.field().M);
        for (int m = 0; m < *order; ++m) {
            if ((power * edge).is_one())
                return m;
            if ((m + 1) % *order == 0)
                return m;
            power *= qii;
        }
        return std::nullopt;
    }
    if (auto m = discrete_log(qii, edge.inverse()))
        return static_cast<int>(*m);
    return std::nullopt;
}

DynkinDiagram dynkin_diagram(const BraidingMatrix& q)
{
    DynkinDiagram d;
    d.field = q.field();
    for (int i = 0; i < q.rank(); ++i)
        d.vertex_labels.push_back(q(i, i));
    for (int a = 0; a < q.rank(); ++a)
        for (int b = a + 1; b < q.rank(); ++b) {
            Scalar e = q.edge(a, b);
            if (!e.is_one())
                d.edges.push_back({a, b, std::move(e)});
        }
    return d;
}

std::string DynkinDiagram::key() const
{
    std::ostringstream out;
    for (const auto& l : vertex_labels)
        out << l.to_string(field.transcendental) << ";";
    out << "|";
    for (const auto& e : edges)
        out << e.a << "-" << e.b << ":" << e.label.to_string(field.transcendental) << ";";
    return out.str();
}

std::string DynkinDiagram::render() const
{
    std::ostringstream out;
    out << "vertices:";
    for (std::size_t i = 0; i < vertex_labels.size(); ++i)
        out << "\n  " << i + 1 << ": " << vertex_labels[i].to_string(field.transcendental);
    out << "\nedges:";
    if (edges.empty())
        out << " none";
    for (const auto& e : edges)
        out << "\n  " << e.a + 1 << " -- " << e.b + 1 << ": " << e.label.to_string(field.transcendental);
    return out.str();
}

std::string to_string(ConditionViolation::Kind kind)
{
    switch (kind) {
    case ConditionViolation::Kind::Cycle: return "cycle";
    case ConditionViolation::Kind::Triangle: return "triangle";
    case ConditionViolation::Kind::LabelOne: return "label-one";
    case ConditionViolation::Kind::TriangleRemark: return "triangle-remark";
    }
    return "unknown";
}

namespace {

using Adjacency = std::vector<std::vector<bool>>;

Adjacency adjacency(const BraidingMatrix& q)
{
    Adjacency adj(q.rank(), std::vector<bool>(q.rank(), false));
    for (int a = 0; a < q.rank(); ++a)
        for (int b = a + 1; b < q.rank(); ++b)
            adj[a][b] = adj[b][a] = !q.edge(a, b).is_one();
    return adj;
}

std::string vertex_list(const std::vector<int>& vs)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < vs.size(); ++k)
        out << (k ? "," : "") << vs[k] + 1;
    return out.str();
}

/// Chordless cycles of length >= 4, each reported once starting at its
/// smallest vertex with path[1] < path.back().
std::vector<std::vector<int>> chordless_cycles(const Adjacency& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<bool> used(n, false);
    std::function<void(int)> extend = [&](int start) {
        const int last = path.back();
        for (int v = start + 1; v < n; ++v) {
            if (used[v] || !adj[last][v])
                continue;
            // v may touch only `last` among interior path vertices
            bool chord = false;
            for (std::size_t k = 1; k + 1 < path.size(); ++k)
                if (adj[path[k]][v]) {
                    chord = true;
                    break;
                }
            if (chord)
                continue;
            path.push_back(v);
            used[v] = true;
            if (path.size() >= 3 && adj[v][start]) {
                // closing edge; triangles are handled separately
                if (path.size() >= 4 && path[1] < path.back())
                    cycles.push_back(path);
            } else {
                extend(start);
            }
            used[v] = false;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        used.assign(n, false);
        used[s] = true;
        extend(s);
    }
    return cycles;
}

} // namespace

std::vector<ConditionViolation> check_necessary_conditions(const BraidingMatrix& q)
{
    std::vector<ConditionViolation> out;
    const auto adj = adjacency(q);
    const int n = q.rank();
    const int M = q.field().M;
    const Scalar minus_one = Scalar::from_int(M, -1);

    for (auto& cycle : chordless_cycles(adj))
        out.push_back({ConditionViolation::Kind::Cycle, cycle,
                       std::to_string(cycle.size()) + "-cycle through vertices " + vertex_list(cycle)});

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (!adj[i][j] || !adj[j][k] || !adj[i][k])
                    continue;
                std::vector<int> tri{i, j, k};
                std::vector<std::string> problems;
                int odd = 0;
                for (int v : tri)
                    odd += q(v, v) == minus_one;
                if (odd == 0)
                    problems.push_back("no vertex labelled -1");
                if (!(q.edge(i, j) * q.edge(j, k) * q.edge(k, i)).is_one())
                    problems.push_back("edge product is not 1");
                if (odd == 1) {
                    int a = *std::find_if(tri.begin(), tri.end(), [&](int v) { return q(v, v) == minus_one; });
                    for (int b : tri)
                        if (b != a && !(q(b, b) * q.edge(a, b)).is_one())
                            problems.push_back("q_" + std::to_string(b + 1) + std::to_string(b + 1) +
                                               " times the edge to vertex " + std::to_string(a + 1) + " is not 1");
                }
                for (auto& p : problems)
                    out.push_back({ConditionViolation::Kind::Triangle, tri, "3-cycle " + vertex_list(tri) + ": " + p});
            }

    for (int i = 0; i < n; ++i) {
        if (!q(i, i).is_one())
            continue;
        for (int j = 0; j < n; ++j)
            if (j != i && adj[i][j])
                out.push_back({ConditionViolation::Kind::LabelOne, {i, j},
                               "vertex " + std::to_string(i + 1) + " has label 1 and a nontrivial edge to " +
                                   std::to_string(j + 1)});
    }
    return out;
}

std::vector<ConditionViolation> check_triangle_remark(const BraidingMatrix& q)
{
    std::vector<ConditionViolation> out;
    const auto adj = adjacency(q);
    const int n = q.rank();
    const Scalar minus_one = Scalar::from_int(q.field().M, -1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (!adj[i][j] || !adj[j][k] || !adj[i][k])
                    continue;
                std::vector<int> tri{i, j, k};
                auto report = [&](const std::string& what) {
                    out.push_back({ConditionViolation::Kind::TriangleRemark, tri, "3-cycle " + vertex_list(tri) + ": " + what});
                };
                int odd = 0;
                for (int v : tri)
                    odd += q(v, v) == minus_one;
                if (odd < 2)
                    report("fewer than two vertices labelled -1");
                for (int v : tri) {
                    if (q(v, v) == minus_one)
                        continue;
                    if (q(v, v).root_of_unity_order())
                        report("label of vertex " + std::to_string(v + 1) + " is a root of unity other than -1");
                    std::vector<Scalar> incident;
                    for (int w : tri)
                        if (w != v)
                            incident.push_back(q.edge(v, w));
                    const Scalar inv = q(v, v).inverse();
                    const Scalar inv2 = inv * inv;
                    bool both_inverse = incident[0] == inv && incident[1] == inv;
                    bool mixed = (incident[0] == inv && incident[1] == inv2) || (incident[0] == inv2 && incident[1] == inv);
                    if (!both_inverse && !mixed)
                        report("edges at vertex " + std::to_string(v + 1) + " do not match its label");
                }
            }
    return out;
}

BraidingMatrix extend_by_root(const BraidingMatrix& q, const MultiDegree& beta)
{
    if (beta.rank() != q.rank())
        throw std::invalid_argument("extend_by_root: degree length does not match rank");
    if (beta.is_zero())
        throw std::invalid_argument("extend_by_root: zero degree");
    if (!beta.is_nonnegative())
        throw std::invalid_argument("extend_by_root: negative degree");
    const int n = q.rank();
    BraidingMatrix w(q.field(), n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w.set(i, j, q(i, j));
    for (int i = 0; i < n; ++i) {
        const auto alpha = MultiDegree::unit(n, i);
        w.set(i, n, bicharacter(q, alpha, beta));
        w.set(n, i, bicharacter(q, beta, alpha));
    }
    w.set(n, n, bicharacter(q, beta, beta));
    return w;
}

std::vector<std::vector<int>> connected_components(const BraidingMatrix& q)
{
    const auto adj = adjacency(q);
    const int n = q.rank();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < members.size(); ++k)
            for (int v = 0; v < n; ++v)
                if (comp[v] < 0 && adj[members[k]][v]) {
                    comp[v] = comp[s];
                    members.push_back(v);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::string to_string(ExceptionalType type)
{
    switch (type) {
    case ExceptionalType::SuperA3_J2: return "SuperA3-J2";
    case ExceptionalType::SuperA3_J123: return "SuperA3-J123";
    case ExceptionalType::D21a_1: return "D21a-4.1";
    case ExceptionalType::D21a_2: return "D21a-4.2";
    case ExceptionalType::D21a_3: return "D21a-4.3";
    case ExceptionalType::Other: return "other";
    }
    return "other";
}

std::optional<ExceptionalType> exceptional_type_from_string(const std::string& tag)
{
    for (auto t : {ExceptionalType::SuperA3_J2, ExceptionalType::SuperA3_J123, ExceptionalType::D21a_1,
                   ExceptionalType::D21a_2, ExceptionalType::D21a_3})
        if (to_string(t) == tag)
            return t;
    return std::nullopt;
}

namespace {

bool finite_order(const Scalar& s)
{
    return s.root_of_unity_order().has_value();
}

} // namespace

TypeMatch recognize_exceptional_type(const BraidingMatrix& q)
{
    TypeMatch none;
    if (q.rank() != 3)
        return none;
    const auto adj = adjacency(q);
    const Scalar minus_one = Scalar::from_int(q.field().M, -1);
    int edges = adj[0][1] + adj[1][2] + adj[0][2];

    if (edges == 3) {
        for (int v = 0; v < 3; ++v)
            if (q(v, v) != minus_one)
                return none;
        // edge (a,b) carries the finite parameter; the other two are infinite
        const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}};
        if (!(q.edge(0, 1) * q.edge(0, 2) * q.edge(1, 2)).is_one())
            return none;
        int finite = 0;
        std::pair<int, int> finite_edge;
        for (auto [a, b] : pairs)
            if (finite_order(q.edge(a, b))) {
                ++finite;
                finite_edge = {a, b};
            }
        if (finite != 1)
            return none;
        int c = 3 - finite_edge.first - finite_edge.second;
        return {ExceptionalType::D21a_3, {finite_edge.first, finite_edge.second, c}};
    }
    if (edges != 2)
        return none;

    int mid = 0;
    while (!(adj[mid][(mid + 1) % 3] && adj[mid][(mid + 2) % 3]))
        ++mid;
    int a = (mid + 1) % 3, c = (mid + 2) % 3;
    if (a > c)
        std::swap(a, c);
    if (q(mid, mid) != minus_one)
        return none;

    if (q(a, a) == minus_one && q(c, c) == minus_one) {
        const Scalar p = q.edge(a, mid);
        if (q.edge(mid, c) == p.inverse() && !finite_order(p))
            return {ExceptionalType::SuperA3_J123, {a, mid, c}};
        return none;
    }
    // chain a -- mid -- c with labels q, -1, r and edges q^-1, r^-1
    const Scalar& qa = q(a, a);
    const Scalar& qc = q(c, c);
    if (q.edge(a, mid) != qa.inverse() || q.edge(mid, c) != qc.inverse())
        return none;
    const Scalar s = (qa * qc).inverse();
    const bool fa = finite_order(qa), fc = finite_order(qc), fs = finite_order(s);
    if (s.is_one()) {
        if (!fa)
            return {ExceptionalType::SuperA3_J2, {a, mid, c}};
        return none;
    }
    if (fs && !fa && !fc)
        return {ExceptionalType::D21a_2, {a, mid, c}};
    if (fa && !fc && !fs)
        return {ExceptionalType::D21a_1, {a, mid, c}};
    if (fc && !fa && !fs)
        return {ExceptionalType::D21a_1, {c, mid, a}};
    return none;
}

} // namespace nichols
