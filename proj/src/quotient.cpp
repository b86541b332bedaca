#include "nichols/quotient.hpp"

#include "nichols/errors.hpp"

#include <algorithm>
#include <exception>

namespace nichols {

EvalContext Presentation::context() const
{
    EvalContext ctx;
    ctx.field = braiding.field();
    ctx.rank = braiding.rank();
    ctx.braiding = &braiding;
    for (const auto& p : params)
        ctx.params[p.name] = p.value;
    return ctx;
}

FreeElement Presentation::evaluate(const RelExpr& e) const
{
    return eval_rel_expr(e, context());
}

FreeElement Presentation::evaluate(const std::string& text) const
{
    return eval_rel_expr(parse_rel_expr(text), context());
}

std::vector<FreeElement> Presentation::evaluated_relations() const
{
    std::vector<FreeElement> out;
    EvalContext ctx = context();
    for (const auto& r : relations) {
        FreeElement e = eval_rel_expr(r, ctx);
        auto d = e.degree();
        if (d && d->total() < 2)
            throw std::invalid_argument("relation '" + r.source() + "' has total degree below 2");
        out.push_back(std::move(e));
    }
    return out;
}

Presentation Presentation::with_relation(const std::string& text) const
{
    Presentation p = *this;
    p.relations.push_back(parse_rel_expr(text));
    return p;
}

Presentation Presentation::without_relation(std::size_t index) const
{
    if (index >= relations.size())
        throw std::out_of_range("relation index out of range");
    Presentation p = *this;
    p.relations.erase(p.relations.begin() + static_cast<std::ptrdiff_t>(index));
    return p;
}

namespace {

using Row = std::vector<Scalar>;

// r -= f * pivot over the given support of pivot.
void subtract_multiple(Row& r, const Scalar& f, const Row& pivot, const std::vector<int>& support)
{
    for (int j : support)
        r[j] -= f * pivot[j];
}

std::vector<int> support_of(const Row& r, int from = 0)
{
    std::vector<int> s;
    for (int j = from; j < static_cast<int>(r.size()); ++j)
        if (!r[j].is_zero())
            s.push_back(j);
    return s;
}

std::vector<Row> reduce_serial(std::vector<Row> rows)
{
    std::vector<Row> echelon;
    std::vector<int> pivots;
    for (auto& v : rows) {
        for (std::size_t t = 0; t < echelon.size(); ++t) {
            if (v[pivots[t]].is_zero())
                continue;
            Scalar f = v[pivots[t]];
            subtract_multiple(v, f, echelon[t], support_of(echelon[t], pivots[t]));
        }
        auto sup = support_of(v);
        if (sup.empty())
            continue;
        int p = sup.front();
        Scalar inv = v[p].inverse();
        for (int j : sup)
            v[j] *= inv;
        for (auto& b : echelon)
            if (!b[p].is_zero()) {
                Scalar f = b[p];
                subtract_multiple(b, f, v, sup);
            }
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
        pivots.insert(pivots.begin() + pos, p);
        echelon.insert(echelon.begin() + pos, std::move(v));
    }
    return echelon;
}

std::vector<Row> reduce_parallel(std::vector<Row> rows)
{
    const int n = static_cast<int>(rows.size());
    const int m = n ? static_cast<int>(rows[0].size()) : 0;
    std::vector<char> used(n, 0);
    std::vector<int> order;
    for (int col = 0; col < m; ++col) {
        int p = -1;
        for (int r = 0; r < n; ++r)
            if (!used[r] && !rows[r][col].is_zero()) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        used[p] = 1;
        auto sup = support_of(rows[p], col);
        Scalar inv = rows[p][col].inverse();
        for (int j : sup)
            rows[p][j] *= inv;
        const Row& pivot = rows[p];
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < n; ++r) {
            if (r == p || rows[r][col].is_zero())
                continue;
            Scalar f = rows[r][col];
            subtract_multiple(rows[r], f, pivot, sup);
        }
        order.push_back(p);
    }
    std::vector<Row> out;
    out.reserve(order.size());
    for (int r : order)
        out.push_back(std::move(rows[r]));
    return out;
}

struct Component {
    std::vector<Word> candidates;          // descending
    std::vector<std::vector<int>> cand_of; // [letter][basis index of degree - alpha_letter]
    std::vector<Word> basis;               // ascending
    std::vector<SparseVector> reduce;      // per candidate, over `basis`
};

} // namespace

std::vector<std::vector<Scalar>> row_reduce(std::vector<std::vector<Scalar>> rows, Execution exec)
{
    return exec == Execution::Serial ? reduce_serial(std::move(rows)) : reduce_parallel(std::move(rows));
}

struct GradedQuotient::Impl {
    BraidingMatrix q;
    std::vector<FreeElement> relations;
    std::vector<MultiDegree> relation_degrees;
    int cutoff;
    Execution exec;
    std::map<MultiDegree, std::unique_ptr<Component>> comps;
    std::map<Word, SparseVector, WordLess> word_cache;

    const Component& comp(const MultiDegree& a) const
    {
        auto it = comps.find(a);
        if (it == comps.end() || !it->second)
            throw std::logic_error("component " + a.to_string() + " requested before it was computed");
        return *it->second;
    }

    void check_cutoff(const MultiDegree& a) const
    {
        if (a.total() > cutoff)
            throw CutoffExceeded("degree " + a.to_string() + " exceeds the cutoff " + std::to_string(cutoff));
        if (!a.is_nonnegative() || a.rank() != q.rank())
            throw std::invalid_argument("invalid multidegree " + a.to_string());
    }

    // v over basis(from) times x_l, over basis(from + alpha_l).
    SparseVector apply_letter(const SparseVector& v, const MultiDegree& from, int l) const
    {
        MultiDegree to = from + MultiDegree::unit(q.rank(), l);
        const Component& ct = comp(to);
        std::vector<Scalar> acc(ct.basis.size(), Scalar::zero(1));
        for (const auto& [k, c] : v)
            for (const auto& [j, d] : ct.reduce[ct.cand_of[l][k]])
                acc[j] += c * d;
        SparseVector out;
        for (int j = 0; j < static_cast<int>(acc.size()); ++j)
            if (!acc[j].is_zero())
                out.emplace_back(j, std::move(acc[j]));
        return out;
    }

    std::unique_ptr<Component> build(const MultiDegree& a, Execution kernel) const
    {
        const int n = q.rank();
        auto c = std::make_unique<Component>();
        c->cand_of.resize(n);
        if (a.is_zero()) {
            c->candidates = {Word{}};
            c->basis = {Word{}};
            c->reduce = {SparseVector{{0, Scalar::one(1)}}};
            return c;
        }
        struct Item {
            Word w;
            int letter, index;
        };
        std::vector<Item> items;
        for (int l = 0; l < n; ++l) {
            if (a[l] == 0)
                continue;
            const Component& cb = comp(a - MultiDegree::unit(n, l));
            c->cand_of[l].assign(cb.basis.size(), -1);
            for (int k = 0; k < static_cast<int>(cb.basis.size()); ++k) {
                Word w = cb.basis[k];
                w.push_back(static_cast<std::uint8_t>(l));
                items.push_back({std::move(w), l, k});
            }
        }
        std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) { return WordLess{}(y.w, x.w); });
        const int nc = static_cast<int>(items.size());
        for (int idx = 0; idx < nc; ++idx) {
            c->cand_of[items[idx].letter][items[idx].index] = idx;
            c->candidates.push_back(std::move(items[idx].w));
        }

        std::vector<Row> rows;
        for (std::size_t r = 0; r < relations.size(); ++r) {
            const MultiDegree& delta = relation_degrees[r];
            if (relations[r].is_zero() || !delta.fits_in(a))
                continue;
            MultiDegree gamma = a - delta;
            const Component& cg = comp(gamma);
            for (int k = 0; k < static_cast<int>(cg.basis.size()); ++k)
                rows.push_back(ideal_row(*c, nc, gamma, k, relations[r]));
        }
        rows = row_reduce(std::move(rows), kernel);

        std::vector<int> pivot_of_row;
        std::vector<int> row_of_pivot(nc, -1);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            int p = 0;
            while (rows[r][p].is_zero())
                ++p;
            row_of_pivot[p] = r;
        }
        std::vector<int> basis_index(nc, -1);
        for (int idx = nc - 1; idx >= 0; --idx)
            if (row_of_pivot[idx] < 0) {
                basis_index[idx] = static_cast<int>(c->basis.size());
                c->basis.push_back(c->candidates[idx]);
            }
        c->reduce.resize(nc);
        for (int idx = 0; idx < nc; ++idx) {
            SparseVector v;
            if (row_of_pivot[idx] < 0) {
                v.emplace_back(basis_index[idx], Scalar::one(1));
            } else {
                const Row& row = rows[row_of_pivot[idx]];
                for (int j = idx + 1; j < nc; ++j)
                    if (!row[j].is_zero())
                        v.emplace_back(basis_index[j], -row[j]);
                std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            }
            c->reduce[idx] = std::move(v);
        }
        return c;
    }

    // b * g in candidate coordinates of the component under construction,
    // where b is basis word k of degree gamma.
    Row ideal_row(const Component& target, int nc, const MultiDegree& gamma, int k, const FreeElement& g) const
    {
        Row row(nc, Scalar::zero(1));
        std::map<Word, SparseVector, WordLess> prefix_cache;
        prefix_cache.emplace(Word{}, SparseVector{{k, Scalar::one(1)}});
        const int n = q.rank();
        // prefix vectors over basis(gamma + deg prefix)
        auto prefix_vector = [&](const Word& w, std::size_t len) -> const SparseVector& {
            std::size_t have = len;
            Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
            while (!prefix_cache.count(pre)) {
                pre.pop_back();
                --have;
            }
            MultiDegree deg = gamma + word_degree(pre, n);
            for (; have < len; ++have) {
                SparseVector next = apply_letter(prefix_cache.at(pre), deg, w[have]);
                deg[w[have]] += 1;
                pre.push_back(w[have]);
                prefix_cache.emplace(pre, std::move(next));
            }
            return prefix_cache.at(pre);
        };
        for (const auto& [w, coeff] : g.terms()) {
            const SparseVector& v = prefix_vector(w, w.size() - 1);
            int last = w.back();
            for (const auto& [j, d] : v)
                row[target.cand_of[last][j]] += coeff * d;
        }
        return row;
    }

    // Computes every missing multidegree of `wanted` (downward closed).
    void compute(std::vector<MultiDegree> wanted)
    {
        std::sort(wanted.begin(), wanted.end());
        std::size_t start = 0;
        while (start < wanted.size()) {
            std::size_t end = start;
            std::vector<MultiDegree> level;
            while (end < wanted.size() && wanted[end].total() == wanted[start].total()) {
                if (!comps.count(wanted[end]))
                    level.push_back(wanted[end]);
                ++end;
            }
            std::vector<std::unique_ptr<Component>> built(level.size());
            if (exec == Execution::Parallel && level.size() > 1) {
                std::exception_ptr error;
                const int count = static_cast<int>(level.size());
#pragma omp parallel for schedule(dynamic)
                for (int idx = 0; idx < count; ++idx) {
                    try {
                        built[idx] = build(level[idx], Execution::Parallel);
                    } catch (...) {
#pragma omp critical
                        if (!error)
                            error = std::current_exception();
                    }
                }
                if (error)
                    std::rethrow_exception(error);
            } else {
                for (std::size_t idx = 0; idx < level.size(); ++idx)
                    built[idx] = build(level[idx], exec);
            }
            for (std::size_t idx = 0; idx < level.size(); ++idx)
                comps[level[idx]] = std::move(built[idx]);
            start = end;
        }
    }

    void ensure(const MultiDegree& a)
    {
        check_cutoff(a);
        if (comps.count(a))
            return;
        std::vector<MultiDegree> wanted;
        MultiDegree b(q.rank());
        for (;;) {
            wanted.push_back(b);
            int i = 0;
            while (i < q.rank() && b[i] == a[i]) {
                b[i] = 0;
                ++i;
            }
            if (i == q.rank())
                break;
            b[i] += 1;
        }
        compute(std::move(wanted));
    }

    const SparseVector& word_nf(const Word& w)
    {
        auto it = word_cache.find(w);
        if (it != word_cache.end())
            return it->second;
        SparseVector v;
        if (w.empty()) {
            v.emplace_back(0, Scalar::one(1));
        } else {
            Word prefix(w.begin(), w.end() - 1);
            SparseVector pv = word_nf(prefix);
            v = apply_letter(pv, word_degree(prefix, q.rank()), w.back());
        }
        return word_cache.emplace(w, std::move(v)).first->second;
    }
};

GradedQuotient::GradedQuotient(const Presentation& p, int cutoff, Execution exec)
    : GradedQuotient(p.braiding, p.evaluated_relations(), cutoff, exec)
{
}

GradedQuotient::GradedQuotient(BraidingMatrix q, std::vector<FreeElement> relations, int cutoff, Execution exec)
    : impl_(std::make_unique<Impl>())
{
    if (cutoff < 0)
        throw std::invalid_argument("negative cutoff");
    for (const auto& r : relations) {
        auto d = r.degree();
        if (d && d->total() < 2)
            throw std::invalid_argument("relation of total degree below 2: " + r.to_string());
        if (!r.is_zero() && r.rank() != q.rank())
            throw std::invalid_argument("relation rank does not match the braiding");
        impl_->relation_degrees.push_back(d ? *d : MultiDegree(q.rank()));
    }
    impl_->q = std::move(q);
    impl_->relations = std::move(relations);
    impl_->cutoff = cutoff;
    impl_->exec = exec;
}

GradedQuotient::~GradedQuotient() = default;
GradedQuotient::GradedQuotient(GradedQuotient&&) noexcept = default;
GradedQuotient& GradedQuotient::operator=(GradedQuotient&&) noexcept = default;

int GradedQuotient::rank() const { return impl_->q.rank(); }
int GradedQuotient::cutoff() const { return impl_->cutoff; }
const BraidingMatrix& GradedQuotient::braiding() const { return impl_->q; }
const std::vector<FreeElement>& GradedQuotient::relations() const { return impl_->relations; }

void GradedQuotient::ensure(const MultiDegree& a)
{
    impl_->ensure(a);
}

void GradedQuotient::ensure_total(int d)
{
    if (d > impl_->cutoff)
        throw CutoffExceeded("total degree " + std::to_string(d) + " exceeds the cutoff " +
                             std::to_string(impl_->cutoff));
    impl_->compute(multidegrees_up_to(rank(), d));
}

const std::vector<Word>& GradedQuotient::component_basis(const MultiDegree& a)
{
    impl_->ensure(a);
    return impl_->comp(a).basis;
}

int GradedQuotient::dimension(const MultiDegree& a)
{
    return static_cast<int>(component_basis(a).size());
}

std::map<MultiDegree, int> GradedQuotient::hilbert_table(int d)
{
    ensure_total(d);
    std::map<MultiDegree, int> table;
    for (const auto& a : multidegrees_up_to(rank(), d))
        table[a] = static_cast<int>(impl_->comp(a).basis.size());
    return table;
}

FreeElement GradedQuotient::normal_form(const FreeElement& u)
{
    FreeElement out(rank());
    for (const auto& [a, part] : u.components()) {
        impl_->ensure(a);
        const Component& c = impl_->comp(a);
        std::vector<Scalar> acc(c.basis.size(), Scalar::zero(1));
        for (const auto& [w, coeff] : part.terms())
            for (const auto& [j, d] : impl_->word_nf(w))
                acc[j] += coeff * d;
        for (std::size_t j = 0; j < acc.size(); ++j)
            out.add_term(c.basis[j], acc[j]);
    }
    return out;
}

bool GradedQuotient::is_zero(const FreeElement& u)
{
    return normal_form(u).is_zero();
}

TensorElement GradedQuotient::reduced_defect(const FreeElement& u)
{
    auto d = u.degree();
    if (!d)
        return TensorElement(rank());
    impl_->ensure(*d);
    TensorElement defect = primitive_defect(impl_->q, u);
    TensorElement out(rank());
    for (const auto& [key, c] : defect.terms()) {
        MultiDegree dl = word_degree(key.first, rank());
        MultiDegree dr = word_degree(key.second, rank());
        const SparseVector left = impl_->word_nf(key.first);
        const SparseVector& right = impl_->word_nf(key.second);
        const auto& bl = impl_->comp(dl).basis;
        const auto& br = impl_->comp(dr).basis;
        for (const auto& [i, a] : left)
            for (const auto& [j, b] : right)
                out.add_term(bl[i], br[j], c * a * b);
    }
    return out;
}

bool GradedQuotient::is_primitive(const FreeElement& u)
{
    return reduced_defect(u).is_zero();
}

std::vector<FreeElement> GradedQuotient::centrality_defects(const FreeElement& u)
{
    std::vector<FreeElement> out;
    auto d = u.degree();
    if (!d)
        return out;
    if (d->total() + 1 > impl_->cutoff)
        throw CutoffExceeded("centrality test needs total degree " + std::to_string(d->total() + 1) +
                             " but the cutoff is " + std::to_string(impl_->cutoff));
    for (int i = 0; i < rank(); ++i) {
        FreeElement x = FreeElement::generator(rank(), i);
        Scalar c = bicharacter(impl_->q, *d, MultiDegree::unit(rank(), i));
        out.push_back(normal_form(u * x - c * (x * u)));
    }
    return out;
}

bool GradedQuotient::is_q_central(const FreeElement& u)
{
    for (const auto& e : centrality_defects(u))
        if (!e.is_zero())
            return false;
    return true;
}

} // namespace nichols
