#pragma once

#include "stableforms/matrix.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace stableforms {

/// Strictly increasing 1-based index tuple keying a basis k-form e^{i1...ik}.
using IndexTuple = std::vector<int>;

using VectorN = std::vector<Scalar>;

VectorN basis_vector(int n, int index, FieldDesc field = FieldDesc::rationals());
bool vec_is_zero(const VectorN& v);

/// Sorts a tuple and returns it with the sign of the sorting permutation,
/// or nullopt when an index repeats (the basis form is zero).
std::optional<std::pair<IndexTuple, int>> normalize_tuple(IndexTuple t);

/// Sign of merging two disjoint increasing tuples into one increasing tuple
/// (parity of the number of transpositions); 0 when they intersect.
int merge_sign(const IndexTuple& a, const IndexTuple& b);

/// Alternating k-form on R^n, stored sparsely as a map from strictly
/// increasing index tuples to exact coefficients. Absent tuples are zero;
/// zero coefficients are pruned, so equal forms have equal maps. Map order
/// is tuple-lexicographic, which fixes all serialization orders.
class KForm {
public:
    KForm() = default;
    KForm(int n, int k, FieldDesc field = FieldDesc::rationals());

    int dim() const { return n_; }
    int degree() const { return k_; }
    const FieldDesc& field() const { return field_; }
    const std::map<IndexTuple, Scalar>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    /// Coefficient of a strictly increasing tuple (zero when absent).
    Scalar coeff(const IndexTuple& t) const;

    /// Adds c * e^t for a strictly increasing tuple t, pruning zeros.
    void accumulate(const IndexTuple& t, const Scalar& c);

    /// Adds c * e^t for an arbitrary tuple: sorts, absorbs the permutation
    /// sign, drops tuples with repeated indices.
    void add_term(const IndexTuple& t, const Scalar& c);

    bool operator==(const KForm& o) const;

    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    KForm& operator*=(const Scalar& c);

private:
    void check_tuple(const IndexTuple& t) const;

    int n_ = 0, k_ = 0;
    FieldDesc field_ = FieldDesc::rationals();
    std::map<IndexTuple, Scalar> coeffs_;
};

KForm operator+(KForm a, const KForm& b);
KForm operator-(KForm a, const KForm& b);
KForm operator*(const Scalar& c, KForm a);

/// The unit top form theta = e^{1...n}. All reductions in this library are
/// taken against this fixed frame.
KForm top_form(int n, FieldDesc field = FieldDesc::rationals());

KForm wedge(const KForm& a, const KForm& b);
KForm wedge_pow(const KForm& a, unsigned power);  // power 0 gives the 0-form 1

/// Interior product v -| alpha; on basis forms
/// e_{j_r} -| e^{j_1<...<j_k} = (-1)^{r-1} e^{j_1...^j_r...j_k}.
KForm interior(const VectorN& v, const KForm& alpha);

/// Full alternating evaluation alpha(v_1, ..., v_k).
Scalar eval(const KForm& alpha, const std::vector<VectorN>& args);

/// Pullback with g acting on arguments: (g*alpha)(v_1,...,v_k) = alpha(g v_1,...,g v_k).
KForm pullback(const Matrix& g, const KForm& alpha);

/// Infinitesimal gl(n) action: (A.alpha)(v_1,...,v_k) = sum_i alpha(v_1,...,A v_i,...,v_k),
/// the derivative at the identity of pullback along exp(tA).
KForm lie_action(const Matrix& a, const KForm& alpha);

/// Inverse of v -> v -| theta on (n-1)-forms: component u_i is
/// (-1)^{i-1} times the coefficient of e^{1...^i...n}.
VectorN vector_from_coform(const KForm& eta);

/// Hodge dual against the standard frame: e^I -> sign(I,I^c) e^{I^c}.
KForm hodge_dual(const KForm& alpha);

}  // namespace stableforms
