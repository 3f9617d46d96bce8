#include "stableforms/exterior.hpp"

#include <algorithm>

namespace stableforms {

VectorN basis_vector(int n, int index, FieldDesc field) {
    if (index < 1 || index > n) throw std::invalid_argument("basis index out of range");
    VectorN v(static_cast<std::size_t>(n), Scalar(mpq_class(0), mpq_class(0), field));
    v[static_cast<std::size_t>(index - 1)] = Scalar(1);
    return v;
}

bool vec_is_zero(const VectorN& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<std::pair<IndexTuple, int>> normalize_tuple(IndexTuple t) {
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < t.size(); ++i) {
        int v = t[i];
        std::size_t j = i;
        while (j > 0 && t[j - 1] > v) {
            t[j] = t[j - 1];
            --j;
            sign = -sign;
        }
        t[j] = v;
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return std::nullopt;
    return std::make_pair(std::move(t), sign);
}

int merge_sign(const IndexTuple& a, const IndexTuple& b) {
    // Count inversions between the concatenation a|b; both inputs increasing.
    int inversions = 0;
    std::size_t bi = 0;
    for (int av : a) {
        // every element of b smaller than av crosses it during the merge
        std::size_t cnt = 0;
        while (cnt < b.size() && b[cnt] < av) ++cnt;
        for (std::size_t i = 0; i < cnt; ++i)
            if (b[i] == av) return 0;
        inversions += static_cast<int>(cnt);
        if (cnt < b.size() && b[cnt] == av) return 0;
        (void)bi;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

KForm::KForm(int n, int k, FieldDesc field) : n_(n), k_(k), field_(field) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("k-form requires 0 <= k <= n");
}

void KForm::check_tuple(const IndexTuple& t) const {
    if (static_cast<int>(t.size()) != k_) throw std::invalid_argument("tuple arity mismatch");
    int prev = 0;
    for (int idx : t) {
        if (idx <= prev || idx > n_) throw std::invalid_argument("tuple not strictly increasing in range");
        prev = idx;
    }
}

Scalar KForm::coeff(const IndexTuple& t) const {
    check_tuple(t);
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? Scalar() : it->second;
}

void KForm::accumulate(const IndexTuple& t, const Scalar& c) {
    if (c.is_zero()) return;
    check_tuple(t);
    field_ = join_fields(field_, c.field());
    auto [it, inserted] = coeffs_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void KForm::add_term(const IndexTuple& t, const Scalar& c) {
    auto norm = normalize_tuple(t);
    if (!norm) return;
    accumulate(norm->first, norm->second < 0 ? -c : c);
}

bool KForm::operator==(const KForm& o) const {
    return n_ == o.n_ && k_ == o.k_ && coeffs_ == o.coeffs_;
}

KForm& KForm::operator+=(const KForm& o) {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("form sum dimension/degree mismatch");
    for (const auto& [t, c] : o.coeffs_) accumulate(t, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("form difference dimension/degree mismatch");
    for (const auto& [t, c] : o.coeffs_) accumulate(t, -c);
    return *this;
}

KForm& KForm::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    field_ = join_fields(field_, c.field());
    for (auto& [t, v] : coeffs_) v *= c;
    return *this;
}

KForm operator+(KForm a, const KForm& b) { return a += b; }
KForm operator-(KForm a, const KForm& b) { return a -= b; }
KForm operator*(const Scalar& c, KForm a) { return a *= c; }

KForm top_form(int n, FieldDesc field) {
    KForm theta(n, n, field);
    IndexTuple all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    theta.accumulate(all, Scalar(1));
    return theta;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge dimension mismatch");
    const int n = a.dim();
    const int k = a.degree() + b.degree();
    const FieldDesc field = join_fields(a.field(), b.field());
    if (k > n) return KForm(n, n, field);  // zero form of top degree
    KForm out(n, k, field);
    IndexTuple merged;
    merged.reserve(static_cast<std::size_t>(k));
    for (const auto& [ta, ca] : a.coeffs()) {
        for (const auto& [tb, cb] : b.coeffs()) {
            const int s = merge_sign(ta, tb);
            if (s == 0) continue;
            merged.clear();
            std::merge(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(merged));
            out.accumulate(merged, s < 0 ? -(ca * cb) : ca * cb);
        }
    }
    return out;
}

KForm wedge_pow(const KForm& a, unsigned power) {
    KForm out(a.dim(), 0, a.field());
    out.accumulate({}, Scalar(1));
    for (unsigned i = 0; i < power; ++i) out = wedge(out, a);
    return out;
}

KForm interior(const VectorN& v, const KForm& alpha) {
    if (static_cast<int>(v.size()) != alpha.dim())
        throw std::invalid_argument("interior product dimension mismatch");
    if (alpha.degree() < 1) throw std::invalid_argument("interior product needs degree >= 1");
    KForm out(alpha.dim(), alpha.degree() - 1, alpha.field());
    IndexTuple reduced;
    for (const auto& [t, c] : alpha.coeffs()) {
        for (std::size_t r = 0; r < t.size(); ++r) {
            const Scalar& comp = v[static_cast<std::size_t>(t[r] - 1)];
            if (comp.is_zero()) continue;
            reduced.clear();
            for (std::size_t i = 0; i < t.size(); ++i)
                if (i != r) reduced.push_back(t[i]);
            Scalar term = comp * c;
            out.accumulate(reduced, r % 2 == 0 ? term : -term);
        }
    }
    return out;
}

Scalar eval(const KForm& alpha, const std::vector<VectorN>& args) {
    if (static_cast<int>(args.size()) != alpha.degree())
        throw std::invalid_argument("evaluation arity mismatch");
    KForm cur = alpha;
    for (const VectorN& v : args) cur = interior(v, cur);
    return cur.coeff({});
}

namespace {

// g*(e^i) as a 1-form: sum_j g(i,j) e^j.
KForm pulled_covector(const Matrix& g, int i, int n, const FieldDesc& field) {
    KForm out(n, 1, field);
    for (int j = 1; j <= n; ++j) {
        const Scalar& entry = g(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        if (!entry.is_zero()) out.accumulate({j}, entry);
    }
    return out;
}

}  // namespace

KForm pullback(const Matrix& g, const KForm& alpha) {
    const int n = alpha.dim();
    if (g.rows() != static_cast<std::size_t>(n) || g.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("pullback dimension mismatch");
    const FieldDesc field = join_fields(g.field(), alpha.field());
    KForm out(n, alpha.degree(), field);
    for (const auto& [t, c] : alpha.coeffs()) {
        KForm prod(n, 0, field);
        prod.accumulate({}, c);
        for (int idx : t) prod = wedge(prod, pulled_covector(g, idx, n, field));
        out += prod;
    }
    return out;
}

KForm lie_action(const Matrix& a, const KForm& alpha) {
    const int n = alpha.dim();
    if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("lie_action dimension mismatch");
    KForm out(n, alpha.degree(), join_fields(a.field(), alpha.field()));
    IndexTuple replaced;
    for (const auto& [t, c] : alpha.coeffs()) {
        for (std::size_t r = 0; r < t.size(); ++r) {
            // replace e^{t_r} by sum_j a(t_r, j) e^j
            for (int j = 1; j <= n; ++j) {
                const Scalar& entry =
                    a(static_cast<std::size_t>(t[r] - 1), static_cast<std::size_t>(j - 1));
                if (entry.is_zero()) continue;
                replaced = t;
                replaced[r] = j;
                out.add_term(replaced, c * entry);
            }
        }
    }
    return out;
}

VectorN vector_from_coform(const KForm& eta) {
    const int n = eta.dim();
    if (eta.degree() != n - 1)
        throw std::invalid_argument("vector_from_coform needs a form of degree n-1");
    VectorN u(static_cast<std::size_t>(n), Scalar(mpq_class(0), mpq_class(0), eta.field()));
    IndexTuple t;
    t.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n; ++i) {
        t.clear();
        for (int j = 1; j <= n; ++j)
            if (j != i) t.push_back(j);
        Scalar c = eta.coeff(t);
        u[static_cast<std::size_t>(i - 1)] = (i % 2 == 1) ? c : -c;
    }
    return u;
}

KForm hodge_dual(const KForm& alpha) {
    const int n = alpha.dim();
    KForm out(n, n - alpha.degree(), alpha.field());
    for (const auto& [t, c] : alpha.coeffs()) {
        IndexTuple comp;
        comp.reserve(static_cast<std::size_t>(n) - t.size());
        std::size_t p = 0;
        for (int j = 1; j <= n; ++j) {
            if (p < t.size() && t[p] == j) ++p;
            else comp.push_back(j);
        }
        const int s = merge_sign(t, comp);
        out.accumulate(comp, s < 0 ? -c : c);
    }
    return out;
}

}  // namespace stableforms
