#ifndef TRUNCSYM_PARTITION_HPP
#define TRUNCSYM_PARTITION_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace truncsym {

/* An exponent vector over a fixed number of variables. */
using Composition = std::vector<unsigned>;

/* Validated API paths refuse partitions heavier than this. */
inline constexpr unsigned long long kMaxPartitionWeight = 1000000;

namespace detail {

inline unsigned long long checked_mul_u64(unsigned long long a, unsigned long long b,
                                          const char* what)
{
    unsigned long long r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error(std::string(what) + ": 64-bit count overflow");
    return r;
}

/* C(n, k) in exact 64-bit arithmetic; throws on overflow. */
inline unsigned long long binomial_u64(unsigned long long n, unsigned long long k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned long long r = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is integral at every step
        unsigned __int128 t = static_cast<unsigned __int128>(r) * (n - k + i);
        t /= i;
        if (t > std::numeric_limits<unsigned long long>::max())
            throw std::overflow_error("binomial_u64: 64-bit count overflow");
        r = static_cast<unsigned long long>(t);
    }
    return r;
}

}  // namespace detail

/* A partition: nonincreasing sequence of positive integers.  The empty
 * partition is valid and indexes the constant symmetric polynomial 1.
 * Trailing zeroes are never stored; any input is canonicalized on
 * construction (sorted nonincreasing, zeroes dropped). */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts))
    {
        std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        finish_init();
    }

    Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

    /* (value^multiplicity): `multiplicity` parts equal to `value`. */
    static Partition rectangle(unsigned value, std::size_t multiplicity)
    {
        if (value == 0 && multiplicity > 0)
            throw std::invalid_argument("Partition::rectangle: zero part");
        Partition out;
        out.parts_.assign(multiplicity, value);
        out.finish_init();
        return out;
    }

    /* Fast path for input that is already nonincreasing and positive. */
    static Partition from_nonincreasing(std::vector<unsigned> parts)
    {
        Partition out;
        out.parts_ = std::move(parts);
        out.finish_init();
        return out;
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t length() const { return parts_.size(); }
    unsigned long long weight() const { return weight_; }

    /* Largest part; 0 for the empty partition. */
    unsigned leading_part() const { return parts_.empty() ? 0u : parts_.front(); }

    /* Number of parts equal to the largest; 0 for the empty partition. */
    std::size_t leading_multiplicity() const
    {
        std::size_t m = 0;
        while (m < parts_.size() && parts_[m] == parts_.front())
            ++m;
        return m;
    }

    /* (value, multiplicity) pairs with strictly decreasing values. */
    std::vector<std::pair<unsigned, std::size_t>> multiplicity_form() const
    {
        std::vector<std::pair<unsigned, std::size_t>> form;
        for (unsigned v : parts_) {
            if (!form.empty() && form.back().first == v)
                ++form.back().second;
            else
                form.emplace_back(v, 1);
        }
        return form;
    }

    /* Componentwise scaling (c*l_1, c*l_2, ...); requires c >= 1. */
    Partition scaled(unsigned factor) const
    {
        if (factor == 0)
            throw std::invalid_argument("Partition::scaled: factor must be positive");
        std::vector<unsigned> out;
        out.reserve(parts_.size());
        for (unsigned v : parts_) {
            unsigned long long s = static_cast<unsigned long long>(v) * factor;
            if (s > kMaxPartitionWeight)
                throw std::invalid_argument("Partition::scaled: part exceeds weight bound");
            out.push_back(static_cast<unsigned>(s));
        }
        return from_nonincreasing(std::move(out));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    void finish_init()
    {
        weight_ = 0;
        unsigned prev = std::numeric_limits<unsigned>::max();
        for (unsigned v : parts_) {
            if (v == 0 || v > prev)
                throw std::invalid_argument("Partition: parts must be positive and nonincreasing");
            prev = v;
            weight_ += v;
        }
        if (weight_ > kMaxPartitionWeight)
            throw std::invalid_argument("Partition: weight exceeds supported bound");
    }

    std::vector<unsigned> parts_;
    unsigned long long weight_ = 0;
};

/* The order used wherever a sequence of partitions must be reproducible:
 * by weight first, then lexicographically larger parts first within a
 * weight.  E.g. (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1). */
inline bool grlex_less(const Partition& a, const Partition& b)
{
    if (a.weight() != b.weight())
        return a.weight() < b.weight();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

struct GrlexLess {
    bool operator()(const Partition& a, const Partition& b) const { return grlex_less(a, b); }
};

struct PartitionStats {
    std::size_t length = 0;
    unsigned long long weight = 0;
    unsigned leading_part = 0;
    std::size_t leading_multiplicity = 0;
    std::vector<std::pair<unsigned, std::size_t>> multiplicity_form;
};

inline PartitionStats partition_stats(const Partition& lambda)
{
    return PartitionStats{lambda.length(), lambda.weight(), lambda.leading_part(),
                          lambda.leading_multiplicity(), lambda.multiplicity_form()};
}

inline Partition scale_partition(const Partition& lambda, unsigned factor)
{
    return lambda.scaled(factor);
}

/* All partitions of `weight` with at most `max_length` parts and leading
 * part >= `min_leading_part` (0 = unconstrained), emitted in the grlex
 * order above.  Empty when no partition qualifies. */
inline std::vector<Partition> enumerate_partitions(unsigned long long weight,
                                                   std::size_t max_length,
                                                   unsigned min_leading_part)
{
    if (weight > kMaxPartitionWeight)
        throw std::invalid_argument("enumerate_partitions: weight exceeds supported bound");
    std::vector<Partition> out;
    if (weight == 0) {
        if (min_leading_part == 0)
            out.emplace_back();
        return out;
    }
    if (max_length == 0)
        return out;

    std::vector<unsigned> stack;
    std::function<void(unsigned long long, std::size_t, unsigned)> rec =
        [&](unsigned long long remaining, std::size_t slots, unsigned cap) {
            if (remaining == 0) {
                out.push_back(Partition::from_nonincreasing(stack));
                return;
            }
            if (slots == 0)
                return;
            unsigned hi = static_cast<unsigned>(std::min<unsigned long long>(remaining, cap));
            unsigned long long lo64 = (remaining + slots - 1) / slots;
            unsigned lo = static_cast<unsigned>(lo64);
            for (unsigned v = hi; v >= lo; --v) {
                stack.push_back(v);
                rec(remaining - v, slots - 1, v);
                stack.pop_back();
                if (v == lo)
                    break;
            }
        };

    unsigned hi = static_cast<unsigned>(weight);
    unsigned long long lo64 = (weight + max_length - 1) / max_length;
    unsigned lo = static_cast<unsigned>(std::max<unsigned long long>(lo64, 1));
    lo = std::max(lo, std::max(min_leading_part, 1u));
    for (unsigned v = hi; v >= lo; --v) {
        stack.push_back(v);
        rec(weight - v, max_length - 1, v);
        stack.pop_back();
        if (v == lo)
            break;
    }
    return out;
}

/* n! / (m_1! ... m_k! (n - l)!): the number of distinct rearrangements of
 * `lambda` padded with zeroes to n entries.  Throws std::invalid_argument
 * when l(lambda) > n and std::overflow_error when the count does not fit
 * in 64 bits. */
inline unsigned long long distinct_permutation_count(const Partition& lambda, std::size_t n)
{
    if (lambda.length() > n)
        throw std::invalid_argument("distinct_permutation_count: partition longer than variable count");
    unsigned long long count = 1;
    std::size_t remaining = n;
    for (const auto& [value, mult] : lambda.multiplicity_form()) {
        (void)value;
        count = detail::checked_mul_u64(count, detail::binomial_u64(remaining, mult),
                                        "distinct_permutation_count");
        remaining -= mult;
    }
    return count;  // zero block fills the rest, C(remaining, remaining) = 1
}

/* Streams every distinct rearrangement of a partition padded with zeroes
 * to n entries, each exactly once, in increasing lexicographic order.
 * Single-pass forward iteration; dereferencing yields the current
 * composition, which is only valid until the next increment. */
class DistinctPermutationRange {
public:
    DistinctPermutationRange(const Partition& lambda, std::size_t n) : first_(n, 0)
    {
        if (lambda.length() > n)
            throw std::invalid_argument("distinct_permutations: partition longer than variable count");
        std::copy(lambda.parts().rbegin(), lambda.parts().rend(),
                  first_.begin() + static_cast<std::ptrdiff_t>(n - lambda.length()));
    }

    struct sentinel {};

    class iterator {
    public:
        using value_type = Composition;
        using reference = const Composition&;
        using difference_type = std::ptrdiff_t;

        iterator() : done_(true) {}
        explicit iterator(Composition start) : cur_(std::move(start)), done_(false) {}

        reference operator*() const { return cur_; }
        iterator& operator++()
        {
            if (!std::next_permutation(cur_.begin(), cur_.end()))
                done_ = true;
            return *this;
        }
        void operator++(int) { ++(*this); }
        bool operator==(sentinel) const { return done_; }
        bool operator!=(sentinel) const { return !done_; }

    private:
        Composition cur_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(first_); }
    sentinel end() const { return {}; }

private:
    Composition first_;
};

inline std::vector<Composition> distinct_permutations(const Partition& lambda, std::size_t n)
{
    std::vector<Composition> out;
    for (const Composition& c : DistinctPermutationRange(lambda, n))
        out.push_back(c);
    return out;
}

/* Sorts a composition nonincreasingly and drops zeroes. */
inline Partition composition_to_partition(const Composition& alpha)
{
    std::vector<unsigned> parts(alpha);
    std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition::from_nonincreasing(std::move(parts));
}

/* Canonical text form: parts joined by ',' with "v^m" for multiplicity
 * m >= 2, e.g. (3,3,2,1) -> "3^2,2,1"; the empty partition renders "". */
inline std::string render_partition(const Partition& lambda)
{
    std::string out;
    for (const auto& [value, mult] : lambda.multiplicity_form()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(value);
        if (mult >= 2) {
            out += '^';
            out += std::to_string(mult);
        }
    }
    return out;
}

/* Accepts comma lists ("3,3,2,1"), power form ("3^2,2,1"), or a mix;
 * whitespace-insensitive; "" parses to the empty partition. */
inline Partition parse_partition(const std::string& text)
{
    std::vector<unsigned> parts;
    std::string token;
    auto flush = [&]() {
        if (token.empty())
            throw std::invalid_argument("parse_partition: empty component in '" + text + "'");
        std::size_t caret = token.find('^');
        std::string value_str = token.substr(0, caret);
        std::string mult_str = caret == std::string::npos ? "1" : token.substr(caret + 1);
        std::size_t used = 0;
        unsigned long long value = 0, mult = 0;
        try {
            value = std::stoull(value_str, &used);
            if (used != value_str.size())
                throw std::invalid_argument("");
            used = 0;
            mult = std::stoull(mult_str, &used);
            if (used != mult_str.size())
                throw std::invalid_argument("");
        }
        catch (const std::exception&) {
            throw std::invalid_argument("parse_partition: bad token '" + token + "'");
        }
        if (value == 0 || mult == 0 || value > kMaxPartitionWeight || mult > kMaxPartitionWeight)
            throw std::invalid_argument("parse_partition: bad token '" + token + "'");
        for (unsigned long long i = 0; i < mult; ++i)
            parts.push_back(static_cast<unsigned>(value));
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t')
            continue;
        if (c == ',')
            flush();
        else
            token += c;
    }
    if (!token.empty())
        flush();
    else if (!parts.empty())
        throw std::invalid_argument("parse_partition: trailing ',' in '" + text + "'");
    return Partition(std::move(parts));
}

}  // namespace truncsym

#endif  // TRUNCSYM_PARTITION_HPP
