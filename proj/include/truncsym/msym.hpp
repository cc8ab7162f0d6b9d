#ifndef TRUNCSYM_MSYM_HPP
#define TRUNCSYM_MSYM_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "truncsym/field.hpp"
#include "truncsym/partition.hpp"

namespace truncsym {

/* c_nu for the basis product m_lambda * m_mu in n variables: the number
 * of pairs (alpha, beta) of padded rearrangements of lambda and mu whose
 * sum is the nonincreasing arrangement of nu.  Counted exactly in Z; the
 * caller maps counts into its coefficient field.  A pair contributes only
 * when alpha + beta is already nonincreasing, which pins the single fixed
 * arrangement of nu. */
inline std::map<Partition, unsigned long long, GrlexLess>
monomial_product_counts(const Partition& lambda, const Partition& mu, std::size_t n)
{
    std::map<Partition, unsigned long long, GrlexLess> counts;
    if (lambda.length() > n || mu.length() > n)
        return counts;

    // materialize the side with fewer rearrangements, stream the other
    const bool lambda_inner = distinct_permutation_count(lambda, n) <= distinct_permutation_count(mu, n);
    const Partition& inner = lambda_inner ? lambda : mu;
    const Partition& outer = lambda_inner ? mu : lambda;
    const std::vector<Composition> inner_perms = distinct_permutations(inner, n);

    std::vector<unsigned> sum(n, 0);
    for (const Composition& alpha : DistinctPermutationRange(outer, n)) {
        for (const Composition& beta : inner_perms) {
            bool nonincreasing = true;
            unsigned prev = ~0u;
            for (std::size_t i = 0; i < n; ++i) {
                unsigned s = alpha[i] + beta[i];
                if (s > prev) {
                    nonincreasing = false;
                    break;
                }
                prev = s;
                sum[i] = s;
            }
            if (!nonincreasing)
                continue;
            std::vector<unsigned> parts(sum);
            while (!parts.empty() && parts.back() == 0)
                parts.pop_back();
            ++counts[Partition::from_nonincreasing(std::move(parts))];
        }
    }
    return counts;
}

/* A symmetric polynomial in n variables stored by its coordinates over
 * the monomial basis {m_lambda : l(lambda) <= n}.  Partitions longer than
 * n are dropped on insertion (m_lambda = 0 there) and zero coefficients
 * are never stored. */
template <class F>
class MSymPoly {
public:
    using Field = F;
    using Elem = typename F::Elem;
    using TermMap = std::map<Partition, Elem, GrlexLess>;

    MSymPoly(std::size_t vars, F field) : n_(vars), field_(std::move(field))
    {
        if (vars == 0)
            throw std::invalid_argument("MSymPoly: variable count must be at least 1");
    }

    /* m_lambda (zero when l(lambda) > n). */
    static MSymPoly basis(std::size_t vars, F field, const Partition& lambda)
    {
        MSymPoly f(vars, std::move(field));
        f.add_term(lambda, f.field_.one());
        return f;
    }

    /* The multiplicative unit m_() = 1. */
    static MSymPoly unit(std::size_t vars, F field) { return basis(vars, std::move(field), Partition{}); }

    std::size_t vars() const { return n_; }
    const F& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& lambda, Elem coeff)
    {
        if (lambda.length() > n_ || coeff.is_zero())
            return;
        auto it = terms_.find(lambda);
        if (it == terms_.end()) {
            terms_.emplace(lambda, std::move(coeff));
        }
        else {
            it->second = it->second + coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Elem coeff(const Partition& lambda) const
    {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        unsigned long long w = terms_.begin()->first.weight();
        for (const auto& [la, c] : terms_) {
            (void)c;
            if (la.weight() != w)
                return false;
        }
        return true;
    }

    /* Weight of the heaviest term; 0 for the zero polynomial. */
    unsigned long long degree() const
    {
        return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
    }

    MSymPoly scaled(const Elem& c) const
    {
        MSymPoly out(n_, field_);
        for (const auto& [la, a] : terms_)
            out.add_term(la, a * c);
        return out;
    }

    MSymPoly operator-() const { return scaled(-field_.one()); }

    friend MSymPoly operator+(const MSymPoly& a, const MSymPoly& b)
    {
        a.require_compatible(b, "msym_add");
        MSymPoly out = a;
        for (const auto& [la, c] : b.terms_)
            out.add_term(la, c);
        return out;
    }

    friend MSymPoly operator-(const MSymPoly& a, const MSymPoly& b)
    {
        a.require_compatible(b, "msym_sub");
        MSymPoly out = a;
        for (const auto& [la, c] : b.terms_)
            out.add_term(la, -c);
        return out;
    }

    friend MSymPoly operator*(const MSymPoly& a, const MSymPoly& b)
    {
        a.require_compatible(b, "msym_mul");
        MSymPoly out(a.n_, a.field_);
        for (const auto& [la, ca] : a.terms_) {
            for (const auto& [mu, cb] : b.terms_) {
                const Elem c = ca * cb;
                for (const auto& [nu, count] : monomial_product_counts(la, mu, a.n_))
                    out.add_term(nu, c * a.field_.from_count(count));
            }
        }
        return out;
    }

    friend bool operator==(const MSymPoly& a, const MSymPoly& b)
    {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MSymPoly& a, const MSymPoly& b) { return !(a == b); }

private:
    void require_compatible(const MSymPoly& o, const char* what) const
    {
        if (n_ != o.n_)
            throw std::invalid_argument(std::string(what) + ": mismatched variable counts " +
                                        std::to_string(n_) + " and " + std::to_string(o.n_));
        if (!(field_ == o.field_))
            throw std::invalid_argument(std::string(what) + ": mismatched coefficient fields");
    }

    std::size_t n_;
    F field_;
    TermMap terms_;
};

template <class F>
MSymPoly<F> pow(const MSymPoly<F>& base, unsigned long long exponent)
{
    MSymPoly<F> acc = MSymPoly<F>::unit(base.vars(), base.field());
    MSymPoly<F> sq = base;
    while (exponent > 0) {
        if (exponent & 1)
            acc = acc * sq;
        exponent >>= 1;
        if (exponent > 0)
            sq = sq * sq;
    }
    return acc;
}

/* Full expansion over x_1..x_n; the independent oracle for the basis
 * product rule.  Exponent vectors map to nonzero coefficients. */
template <class F>
std::map<Composition, typename F::Elem> expand_to_monomials(const MSymPoly<F>& f)
{
    std::map<Composition, typename F::Elem> out;
    for (const auto& [lambda, c] : f.terms()) {
        for (const Composition& alpha : DistinctPermutationRange(lambda, f.vars()))
            out.emplace(alpha, c);
    }
    return out;
}

/* Inverse of expand_to_monomials: recovers the unique m-basis
 * coordinates of a symmetric expansion.  Rejects input whose coefficient
 * is not constant on some orbit of exponent vectors, naming that orbit. */
template <class F>
MSymPoly<F> from_monomial_expansion(const std::map<Composition, typename F::Elem>& expansion,
                                    std::size_t n, F field)
{
    struct Orbit {
        typename F::Elem value;
        unsigned long long seen;
    };
    std::map<Partition, Orbit, GrlexLess> orbits;
    for (const auto& [alpha, c] : expansion) {
        if (alpha.size() != n)
            throw std::invalid_argument("from_monomial_expansion: exponent vector has " +
                                        std::to_string(alpha.size()) + " entries, expected " +
                                        std::to_string(n));
        Partition lambda = composition_to_partition(alpha);
        auto it = orbits.find(lambda);
        if (it == orbits.end()) {
            orbits.emplace(lambda, Orbit{c, 1});
        }
        else {
            if (!(it->second.value == c))
                throw std::invalid_argument(
                    "from_monomial_expansion: expansion is not symmetric on the orbit of m[" +
                    render_partition(lambda) + "]");
            ++it->second.seen;
        }
    }
    MSymPoly<F> out(n, std::move(field));
    for (const auto& [lambda, orbit] : orbits) {
        if (!orbit.value.is_zero() && orbit.seen != distinct_permutation_count(lambda, n))
            throw std::invalid_argument(
                "from_monomial_expansion: expansion is not symmetric on the orbit of m[" +
                render_partition(lambda) + "]");
        out.add_term(lambda, orbit.value);
    }
    return out;
}

/* Checks m_(s) = sum_{j=1}^{n} (-1)^(j-1) m_(1^j) m_(s-j) in n variables,
 * with every product computed through the basis product rule.  Requires
 * s > n >= 1. */
template <class F>
bool verify_newton_identity(std::size_t n, unsigned long long s, const F& field)
{
    if (n < 1 || s <= n)
        throw std::invalid_argument("verify_newton_identity: requires s > n >= 1");
    MSymPoly<F> acc(n, field);
    for (std::size_t j = 1; j <= n; ++j) {
        MSymPoly<F> term = MSymPoly<F>::basis(n, field, Partition::rectangle(1, j)) *
                           MSymPoly<F>::basis(n, field, Partition{static_cast<unsigned>(s - j)});
        acc = (j % 2 == 1) ? acc + term : acc - term;
    }
    return acc == MSymPoly<F>::basis(n, field, Partition{static_cast<unsigned>(s)});
}

}  // namespace truncsym

#endif  // TRUNCSYM_MSYM_HPP
