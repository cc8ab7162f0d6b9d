#ifndef TRUNCSYM_IDEAL_HPP
#define TRUNCSYM_IDEAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "truncsym/field.hpp"
#include "truncsym/linalg.hpp"
#include "truncsym/msym.hpp"
#include "truncsym/partition.hpp"

namespace truncsym {

/* One generator m_((d+h)^(p^level)) of the truncation ideal. */
struct GeneratorEntry {
    unsigned level = 0;  // i: the block index; the rectangle has p^i rows
    unsigned h = 0;      // 1..q_i within the block
    Partition partition;
    unsigned long long degree = 0;  // (d+h) * p^i
    bool retained = true;
};

struct GeneratorSpec {
    unsigned long long p = 0;  // characteristic: 0 or prime
    std::size_t n = 1;
    unsigned d = 0;
    unsigned t = 0;  // largest i with p^i <= n (0 in characteristic 0)
    std::vector<GeneratorEntry> entries;

    std::vector<GeneratorEntry> retained_entries() const
    {
        std::vector<GeneratorEntry> out;
        for (const auto& e : entries) {
            if (e.retained)
                out.push_back(e);
        }
        return out;
    }

    std::vector<GeneratorEntry> dropped_entries() const
    {
        std::vector<GeneratorEntry> out;
        for (const auto& e : entries) {
            if (!e.retained)
                out.push_back(e);
        }
        return out;
    }
};

/* The generating set of the degree-d truncation ideal in n variables:
 * blocks m_((d+h)^(p^i)) for 0 <= i <= t and 1 <= h <= q_i = floor(n/p^i).
 * In characteristic 0 (or when n < p) only the i = 0 block m_(d+1) ..
 * m_(d+n) remains. */
inline GeneratorSpec theorem_generators(unsigned long long p, std::size_t n, unsigned d)
{
    FieldSpec spec(p);  // validates: 0 or prime
    if (n == 0)
        throw std::invalid_argument("theorem_generators: n must be at least 1");

    GeneratorSpec out;
    out.p = p;
    out.n = n;
    out.d = d;
    out.t = 0;

    std::vector<unsigned long long> block_sizes;  // p^i for each block
    if (p == 0) {
        block_sizes.push_back(1);
    }
    else {
        for (unsigned long long pi = 1; pi <= n; pi *= p) {
            block_sizes.push_back(pi);
            if (pi > n / p)
                break;
        }
        out.t = static_cast<unsigned>(block_sizes.size() - 1);
    }

    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
        const unsigned long long pi = block_sizes[i];
        const unsigned long long q = n / pi;
        for (unsigned long long h = 1; h <= q; ++h) {
            GeneratorEntry e;
            e.level = static_cast<unsigned>(i);
            e.h = static_cast<unsigned>(h);
            e.partition = Partition::rectangle(static_cast<unsigned>(d + h),
                                               static_cast<std::size_t>(pi));
            e.degree = (d + h) * pi;
            e.retained = true;
            out.entries.push_back(std::move(e));
        }
    }
    return out;
}

/* Same set with the conjecturally redundant members flagged: an entry
 * m_((d+h)^(p^i)) is dropped exactly when d+h = p(d+j) for some j in
 * {1..h}, because it is then the p-th power of m_((d+j)^(p^i)). */
inline GeneratorSpec conjecture_generators(unsigned long long p, std::size_t n, unsigned d)
{
    if (p == 0)
        throw std::invalid_argument("conjecture_generators: requires positive characteristic");
    GeneratorSpec out = theorem_generators(p, n, d);
    for (auto& e : out.entries) {
        for (unsigned long long j = 1; j <= e.h; ++j) {
            if (d + e.h == p * (d + j)) {
                e.retained = false;
                break;
            }
        }
    }
    return out;
}

/* Membership in the truncation ideal is visible on the support: every
 * partition must have leading part >= d+1. */
template <class F>
bool is_truncation_member(const MSymPoly<F>& f, unsigned d)
{
    for (const auto& [lambda, c] : f.terms()) {
        (void)c;
        if (lambda.leading_part() < d + 1)
            return false;
    }
    return true;
}

/* The degree-D basis of the truncation ideal: all weight-D partitions
 * with length <= n and leading part >= d+1, grlex ordered. */
inline std::vector<Partition> graded_target_basis(std::size_t n, unsigned d, unsigned long long D)
{
    return enumerate_partitions(D, n, d + 1);
}

namespace detail {

inline Composition padded_descending(const Partition& lambda, std::size_t n)
{
    Composition out(n, 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), out.begin());
    return out;
}

}  // namespace detail

/* Coordinates of a homogeneous polynomial over an ordered partition
 * basis; terms outside the basis are rejected. */
template <class F>
std::vector<typename F::Elem> coordinates(const MSymPoly<F>& f,
                                          const std::vector<Partition>& basis)
{
    std::map<Partition, std::size_t, GrlexLess> index;
    for (std::size_t j = 0; j < basis.size(); ++j)
        index.emplace(basis[j], j);
    std::vector<typename F::Elem> out(basis.size(), f.field().zero());
    for (const auto& [lambda, c] : f.terms()) {
        auto it = index.find(lambda);
        if (it == index.end())
            throw std::invalid_argument("coordinates: term m[" + render_partition(lambda) +
                                        "] outside the column basis");
        out[it->second] = c;
    }
    return out;
}

/* The degree-D slice of the ideal generated by the homogeneous
 * polynomials `gens`: one row per pair (mu, g) with |mu| = D - deg g,
 * holding the coordinates of m_mu * g over all weight-D partitions of
 * length <= n.  Row order: generators first, mu in grlex order within a
 * generator.  Generators of degree above D contribute no rows.
 *
 * Rows are accumulated column by column: for a column partition nu and a
 * padded rearrangement beta of a term of g, the difference nu_hat - beta
 * (when nonnegative) sorts to the row partition mu it contributes to.
 * This walks exactly the pairs counted by the basis product rule. */
template <class F>
GradedMatrix<F> ideal_graded_span(const std::vector<MSymPoly<F>>& gens, std::size_t n,
                                  unsigned long long D, const F& field)
{
    GradedMatrix<F> M(field);
    M.vars = n;
    M.degree = D;
    M.column_basis = enumerate_partitions(D, n, 0);

    for (const MSymPoly<F>& g : gens) {
        if (!g.is_homogeneous())
            throw std::invalid_argument("ideal_graded_span: generator is not homogeneous");
        if (g.is_zero() || g.degree() > D)
            continue;
        if (g.vars() != n || !(g.field() == field))
            throw std::invalid_argument("ideal_graded_span: generator has mismatched context");

        const std::vector<Partition> mus = enumerate_partitions(D - g.degree(), n, 0);
        std::map<Partition, std::size_t, GrlexLess> row_index;
        for (std::size_t r = 0; r < mus.size(); ++r)
            row_index.emplace(mus[r], r);

        std::vector<std::vector<typename F::Elem>> block(
            mus.size(), std::vector<typename F::Elem>(M.column_basis.size(), field.zero()));

        std::vector<unsigned> alpha(n, 0);
        for (const auto& [lambda, c] : g.terms()) {
            const std::vector<Composition> betas = distinct_permutations(lambda, n);
            for (std::size_t col = 0; col < M.column_basis.size(); ++col) {
                const Composition nu_hat = detail::padded_descending(M.column_basis[col], n);
                for (const Composition& beta : betas) {
                    bool ok = true;
                    for (std::size_t i = 0; i < n; ++i) {
                        if (beta[i] > nu_hat[i]) {
                            ok = false;
                            break;
                        }
                        alpha[i] = nu_hat[i] - beta[i];
                    }
                    if (!ok)
                        continue;
                    const std::size_t r = row_index.at(composition_to_partition(alpha));
                    block[r][col] = block[r][col] + c;
                }
            }
        }
        for (auto& row : block)
            M.rows.push_back(std::move(row));
    }
    return M;
}

/* Mirrors the row order of ideal_graded_span: (generator index, mu). */
template <class F>
std::vector<std::pair<std::size_t, Partition>> ideal_span_row_labels(
    const std::vector<MSymPoly<F>>& gens, std::size_t n, unsigned long long D)
{
    std::vector<std::pair<std::size_t, Partition>> out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].is_zero() || gens[k].degree() > D)
            continue;
        for (const Partition& mu : enumerate_partitions(D - gens[k].degree(), n, 0))
            out.emplace_back(k, mu);
    }
    return out;
}

struct CheckResult {
    std::string kind;  // "rank" | "generation" | "minimality"
    std::string subject;
    unsigned long long degree = 0;
    bool passed = false;
    std::optional<std::size_t> rank_expected;
    std::optional<std::size_t> rank_found;
    /* Witness combination, filled only for a minimality failure (the
     * retained generator was expressible from the others). */
    std::string certificate;
};

struct VerificationReport {
    unsigned long long p = 0;
    std::size_t n = 1;
    unsigned d = 0;
    std::vector<CheckResult> checks;

    bool overall() const
    {
        for (const auto& c : checks) {
            if (!c.passed)
                return false;
        }
        return true;
    }
};

struct VerifyOptions {
    std::optional<unsigned long long> degree_bound;
    /* When set, every span matrix is appended here as (tag, CSV-ready matrix). */
    std::vector<std::pair<std::string, std::string>>* matrix_dump = nullptr;
};

namespace detail {

/* Compact CSV: a comment line naming the columns, then numeric rows. */
template <class F>
std::string matrix_csv(const GradedMatrix<F>& M)
{
    std::string out = "# columns:";
    for (const Partition& la : M.column_basis)
        out += " m[" + render_partition(la) + "]";
    out += '\n';
    for (const auto& row : M.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += ',';
            out += row[j].str();
        }
        out += '\n';
    }
    return out;
}

template <class F>
void maybe_dump(const VerifyOptions& opt, const std::string& tag, const GradedMatrix<F>& M)
{
    if (opt.matrix_dump)
        opt.matrix_dump->emplace_back(tag, matrix_csv(M));
}

template <class F>
std::vector<MSymPoly<F>> entry_polys(const std::vector<GeneratorEntry>& entries, std::size_t n,
                                     const F& field)
{
    std::vector<MSymPoly<F>> out;
    out.reserve(entries.size());
    for (const auto& e : entries)
        out.push_back(MSymPoly<F>::basis(n, field, e.partition));
    return out;
}

inline unsigned long long max_generator_degree(const GeneratorSpec& gs)
{
    unsigned long long m = 0;
    for (const auto& e : gs.entries)
        m = std::max(m, e.degree);
    return m;
}

}  // namespace detail

/* Degree-by-degree rank comparison of the generated ideal against the
 * full truncation ideal.  For each D <= Dmax the span of the generator
 * products must have the same rank as the degree-D target basis and stay
 * supported inside it.  Default Dmax: max generator degree + d + 1. */
template <CoefficientField F>
VerificationReport verify_theorem(const F& field, std::size_t n, unsigned d,
                                  const VerifyOptions& opt = {})
{
    const GeneratorSpec gs = theorem_generators(field.characteristic(), n, d);
    const auto gen_polys = detail::entry_polys(gs.entries, n, field);
    const unsigned long long dmax =
        opt.degree_bound.value_or(detail::max_generator_degree(gs) + d + 1);

    VerificationReport rep;
    rep.p = field.characteristic();
    rep.n = n;
    rep.d = d;
    const std::string subject = "I(" + std::to_string(n) + "," + std::to_string(d) + ")";

    for (unsigned long long D = 0; D <= dmax; ++D) {
        const GradedMatrix<F> span = ideal_graded_span(gen_polys, n, D, field);
        const std::vector<Partition> target = graded_target_basis(n, d, D);

        // inclusion: every row supported on columns with leading part >= d+1
        bool inside = true;
        for (const auto& row : span.rows) {
            for (std::size_t j = 0; j < row.size() && inside; ++j) {
                if (!row[j].is_zero() && span.column_basis[j].leading_part() < d + 1)
                    inside = false;
            }
            if (!inside)
                break;
        }

        const RowReduction<F> red = row_reduce(span);
        CheckResult check;
        check.kind = "rank";
        check.subject = subject;
        check.degree = D;
        check.rank_expected = target.size();
        check.rank_found = red.rank;
        check.passed = inside && red.rank == target.size();
        rep.checks.push_back(std::move(check));

        detail::maybe_dump(opt, "theorem_D" + std::to_string(D), span);
    }
    return rep;
}

inline VerificationReport verify_theorem(unsigned long long p, std::size_t n, unsigned d,
                                         const VerifyOptions& opt = {})
{
    return with_field(FieldSpec(p),
                      [&](const auto& field) { return verify_theorem(field, n, d, opt); });
}

namespace detail {

/* Renders sum_k c_k * m[mu_k]*m[gen_k] from a span certificate. */
template <class F>
std::string render_combination(const std::vector<typename F::Elem>& cert,
                               const std::vector<std::pair<std::size_t, Partition>>& labels,
                               const std::vector<GeneratorEntry>& entries, const F&)
{
    std::string out;
    for (std::size_t r = 0; r < cert.size(); ++r) {
        if (cert[r].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        if (!cert[r].is_one())
            out += cert[r].str() + "*";
        out += "m[" + render_partition(labels[r].second) + "]*m[" +
               render_partition(entries[labels[r].first].partition) + "]";
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

/* Checks the conjectured minimal generating set in characteristic p:
 * every dropped generator must lie in the retained set's slice of its own
 * degree (with the Frobenius power identity cross-checked), and no
 * retained generator may lie in the slice spanned by the others.  A
 * minimality failure is a conjecture counterexample, reported with the
 * witness combination. */
inline VerificationReport verify_conjecture(const PrimeField& field, std::size_t n, unsigned d,
                                            const VerifyOptions& opt = {})
{
    using F = PrimeField;
    const GeneratorSpec gs = conjecture_generators(field.p, n, d);
    const std::vector<GeneratorEntry> retained = gs.retained_entries();

    VerificationReport rep;
    rep.p = field.p;
    rep.n = n;
    rep.d = d;

    for (const GeneratorEntry& e : gs.dropped_entries()) {
        const auto polys = detail::entry_polys(retained, n, field);
        const GradedMatrix<F> span = ideal_graded_span(polys, n, e.degree, field);
        const auto coords = coordinates(MSymPoly<F>::basis(n, field, e.partition),
                                        span.column_basis);
        const bool generated = in_span(coords, span);

        // d+h = p(d+j): the dropped generator is the p-th power of the
        // level-i generator with parameter j
        bool frobenius_ok = false;
        for (unsigned long long j = 1; j <= e.h; ++j) {
            if (d + e.h != field.p * (d + j))
                continue;
            const Partition source = Partition::rectangle(static_cast<unsigned>(d + j),
                                                          e.partition.length());
            frobenius_ok = pow(MSymPoly<F>::basis(n, field, source), field.p) ==
                           MSymPoly<F>::basis(n, field, e.partition);
            break;
        }

        CheckResult check;
        check.kind = "generation";
        check.subject = "m[" + render_partition(e.partition) + "]";
        check.degree = e.degree;
        check.passed = generated && frobenius_ok;
        rep.checks.push_back(std::move(check));

        detail::maybe_dump(opt, "generation_" + std::to_string(e.degree), span);
    }

    for (std::size_t k = 0; k < retained.size(); ++k) {
        std::vector<GeneratorEntry> others;
        for (std::size_t j = 0; j < retained.size(); ++j) {
            if (j != k)
                others.push_back(retained[j]);
        }
        const GeneratorEntry& e = retained[k];
        const auto polys = detail::entry_polys(others, n, field);
        const GradedMatrix<F> span = ideal_graded_span(polys, n, e.degree, field);
        const auto coords = coordinates(MSymPoly<F>::basis(n, field, e.partition),
                                        span.column_basis);

        CheckResult check;
        check.kind = "minimality";
        check.subject = "m[" + render_partition(e.partition) + "]";
        check.degree = e.degree;
        check.passed = !in_span(coords, span);
        if (!check.passed) {
            const auto cert = span_certificate(coords, span);
            if (cert) {
                const auto labels = ideal_span_row_labels(polys, n, e.degree);
                check.certificate = detail::render_combination(*cert, labels, others, field);
            }
        }
        rep.checks.push_back(std::move(check));

        detail::maybe_dump(opt, "minimality_" + std::to_string(e.degree) + "_" + std::to_string(k),
                           span);
    }
    return rep;
}

inline VerificationReport verify_conjecture(unsigned long long p, std::size_t n, unsigned d,
                                            const VerifyOptions& opt = {})
{
    if (p == 0)
        throw std::invalid_argument("verify_conjecture: requires positive characteristic");
    return verify_conjecture(PrimeField(p), n, d, opt);
}

}  // namespace truncsym

#endif  // TRUNCSYM_IDEAL_HPP
