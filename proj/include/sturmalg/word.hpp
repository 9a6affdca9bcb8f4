#pragma once

#include "sturmalg/alpha.hpp"
#include "sturmalg/numeric.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace sturmalg {

/// Finite binary word over {0,1}.
class FiniteWord {
public:
    FiniteWord() = default;
    static FiniteWord parse(std::string_view bits); // validates characters

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int at(std::size_t i) const { return bits_[i] - '0'; }

    /// Number of letters 1.
    std::size_t height() const;

    FiniteWord prefix(std::size_t k) const;
    FiniteWord suffix(std::size_t k) const;
    FiniteWord substr(std::size_t pos, std::size_t len) const;

    void push_back(int bit);
    FiniteWord appended(int bit) const;
    friend FiniteWord operator+(const FiniteWord& a, const FiniteWord& b);

    const std::string& str() const { return bits_; }

    /// Ordered by (length, lexicographic) so degree-graded containers stay
    /// grouped by length.
    std::strong_ordering operator<=>(const FiniteWord& o) const;
    bool operator==(const FiniteWord& o) const = default;

private:
    std::string bits_;
};

/// Description of an infinite binary word: an explicit periodic pattern or a
/// lower mechanical word w_i = floor(alpha(i+1)+rho) - floor(alpha*i+rho).
class WordSpec {
public:
    static WordSpec periodic(FiniteWord pattern); // pattern nonempty
    static WordSpec mechanical(Alpha alpha, Rat rho = Rat(0));

    bool is_explicit_periodic() const { return periodic_; }
    bool is_mechanical() const { return !periodic_; }
    /// Sturmian iff mechanical with irrational (surd) slope.
    bool is_sturmian() const { return !periodic_ && !alpha_.is_rational(); }

    const FiniteWord& pattern() const;
    const Alpha& alpha() const;
    const Rat& rho() const;

    int letter(long i) const; // i >= 0

    /// Mechanical specs with rational alpha normalize to an explicit
    /// periodic pattern of length den(alpha); everything else is returned
    /// unchanged.
    WordSpec periodic_form() const;

    std::string render() const;

    bool operator==(const WordSpec& o) const;

private:
    WordSpec() : alpha_(Alpha::from_rational(Rat(1, 2))) {}

    bool periodic_ = true;
    FiniteWord pattern_;
    Alpha alpha_;
    Rat rho_;
};

/// All length-n factors of the infinite word, n = length.
struct FactorSet {
    int length = 0;
    std::set<FiniteWord> members;
};

FiniteWord prefix(const WordSpec& spec, long n);
FactorSet factors(const WordSpec& spec, int n);   // n >= 1
long complexity(const WordSpec& spec, int n);     // |factors(spec,n)|
std::size_t height(const FiniteWord& x);
Rat slope_finite(const FiniteWord& x);            // throws on the empty word
Alpha slope_limit(const WordSpec& spec);
long balance_constant(const WordSpec& spec, int max_n);
bool slope_deviation_check(const WordSpec& spec, int max_n, long c);
std::optional<int> disjointness_degree(const WordSpec& a, const WordSpec& b, int max_n);

} // namespace sturmalg
