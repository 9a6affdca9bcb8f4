#include "sturmalg/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace sturmalg {

FiniteWord FiniteWord::parse(std::string_view bits) {
    FiniteWord w;
    w.bits_.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::domain_error("word letters must be 0 or 1");
        w.bits_.push_back(c);
    }
    return w;
}

std::size_t FiniteWord::height() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

FiniteWord FiniteWord::prefix(std::size_t k) const { return substr(0, k); }

FiniteWord FiniteWord::suffix(std::size_t k) const { return substr(size() - k, k); }

FiniteWord FiniteWord::substr(std::size_t pos, std::size_t len) const {
    if (pos + len > size()) throw std::out_of_range("word slice out of range");
    FiniteWord w;
    w.bits_ = bits_.substr(pos, len);
    return w;
}

void FiniteWord::push_back(int bit) {
    if (bit != 0 && bit != 1) throw std::domain_error("word letters must be 0 or 1");
    bits_.push_back(static_cast<char>('0' + bit));
}

FiniteWord FiniteWord::appended(int bit) const {
    FiniteWord w = *this;
    w.push_back(bit);
    return w;
}

FiniteWord operator+(const FiniteWord& a, const FiniteWord& b) {
    FiniteWord w = a;
    w.bits_ += b.bits_;
    return w;
}

std::strong_ordering FiniteWord::operator<=>(const FiniteWord& o) const {
    if (auto c = bits_.size() <=> o.bits_.size(); c != 0) return c;
    const int c = bits_.compare(o.bits_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

WordSpec WordSpec::periodic(FiniteWord pattern) {
    if (pattern.empty()) throw std::domain_error("periodic pattern must be nonempty");
    WordSpec s;
    s.periodic_ = true;
    s.pattern_ = std::move(pattern);
    return s;
}

WordSpec WordSpec::mechanical(Alpha alpha, Rat rho) {
    if (alpha.compare(Rat(0)) <= 0 || alpha.compare(Rat(1)) >= 0)
        throw std::domain_error("mechanical slope must lie strictly between 0 and 1");
    if (rho < 0 || rho >= 1)
        throw std::domain_error("mechanical intercept rho must lie in [0,1)");
    WordSpec s;
    s.periodic_ = false;
    s.alpha_ = std::move(alpha);
    s.rho_ = std::move(rho);
    return s;
}

const FiniteWord& WordSpec::pattern() const {
    if (!periodic_) throw std::logic_error("pattern() on a mechanical spec");
    return pattern_;
}

const Alpha& WordSpec::alpha() const {
    if (periodic_) throw std::logic_error("alpha() on a periodic spec");
    return alpha_;
}

const Rat& WordSpec::rho() const {
    if (periodic_) throw std::logic_error("rho() on a periodic spec");
    return rho_;
}

int WordSpec::letter(long i) const {
    if (i < 0) throw std::out_of_range("negative letter index");
    if (periodic_) return pattern_.at(static_cast<std::size_t>(i % static_cast<long>(pattern_.size())));
    const Int f0 = alpha_.floor_scaled(Int(i), rho_);
    const Int f1 = alpha_.floor_scaled(Int(i + 1), rho_);
    const Int d = f1 - f0;
    return static_cast<int>(d);
}

WordSpec WordSpec::periodic_form() const {
    if (periodic_ || !alpha_.is_rational()) return *this;
    const Int den = boost::multiprecision::denominator(alpha_.rational_value());
    const long period = den.convert_to<long>();
    return WordSpec::periodic(prefix(*this, period));
}

std::string WordSpec::render() const {
    if (periodic_) return "periodic:" + pattern_.str();
    std::string out = "mech:" + alpha_.str();
    if (rho_ != 0) out += ",rho=" + boost::multiprecision::numerator(rho_).str() + "/" +
                          boost::multiprecision::denominator(rho_).str();
    return out;
}

bool WordSpec::operator==(const WordSpec& o) const {
    if (periodic_ != o.periodic_) return false;
    if (periodic_) return pattern_ == o.pattern_;
    return alpha_ == o.alpha_ && rho_ == o.rho_;
}

FiniteWord prefix(const WordSpec& spec, long n) {
    if (n < 0) throw std::domain_error("prefix length must be nonnegative");
    FiniteWord w;
    if (spec.is_explicit_periodic()) {
        const auto& p = spec.pattern();
        for (long i = 0; i < n; ++i) w.push_back(p.at(static_cast<std::size_t>(i % static_cast<long>(p.size()))));
        return w;
    }
    // One floor per position via the telescoping differences.
    Int prev = spec.alpha().floor_scaled(Int(0), spec.rho());
    for (long i = 1; i <= n; ++i) {
        Int cur = spec.alpha().floor_scaled(Int(i), spec.rho());
        w.push_back(static_cast<int>(cur - prev));
        prev = std::move(cur);
    }
    return w;
}

namespace {

FactorSet factors_of_scan(const FiniteWord& scan, int n) {
    FactorSet fs;
    fs.length = n;
    if (static_cast<std::size_t>(n) > scan.size()) return fs;
    for (std::size_t i = 0; i + n <= scan.size(); ++i)
        fs.members.insert(scan.substr(i, static_cast<std::size_t>(n)));
    return fs;
}

} // namespace

FactorSet factors(const WordSpec& spec, int n) {
    if (n < 1) throw std::domain_error("factor length must be positive");
    const WordSpec w = spec.periodic_form();
    if (w.is_explicit_periodic()) {
        const long period = static_cast<long>(w.pattern().size());
        return factors_of_scan(prefix(w, period + n - 1), n);
    }
    // Sturmian: complexity is exactly n+1, so collect until that many
    // distinct factors appear.
    const std::size_t target = static_cast<std::size_t>(n) + 1;
    long len = std::max<long>(64, 4L * n);
    constexpr long kScanCap = 1L << 22;
    while (true) {
        FactorSet fs = factors_of_scan(prefix(w, len), n);
        if (fs.members.size() == target) return fs;
        if (fs.members.size() > target)
            throw std::logic_error("mechanical word exceeded Sturmian complexity");
        if (len >= kScanCap)
            throw std::logic_error("factor enumeration did not converge");
        len *= 2;
    }
}

long complexity(const WordSpec& spec, int n) {
    return static_cast<long>(factors(spec, n).members.size());
}

std::size_t height(const FiniteWord& x) { return x.height(); }

Rat slope_finite(const FiniteWord& x) {
    if (x.empty()) throw std::domain_error("undefined slope of the empty word");
    return Rat(Int(x.height()), Int(x.size()));
}

Alpha slope_limit(const WordSpec& spec) {
    if (spec.is_mechanical()) return spec.alpha();
    return Alpha::from_rational(Int(spec.pattern().height()), Int(spec.pattern().size()));
}

long balance_constant(const WordSpec& spec, int max_n) {
    if (max_n < 1) throw std::domain_error("balance range must be positive");
    long best = 0;
    for (int n = 1; n <= max_n; ++n) {
        const FactorSet fs = factors(spec, n);
        std::size_t lo = n + 1, hi = 0;
        bool any = false;
        for (const auto& u : fs.members) {
            const std::size_t h = u.height();
            lo = any ? std::min(lo, h) : h;
            hi = any ? std::max(hi, h) : h;
            any = true;
        }
        if (any) best = std::max(best, static_cast<long>(hi - lo));
    }
    return best;
}

bool slope_deviation_check(const WordSpec& spec, int max_n, long c) {
    if (max_n < 1) throw std::domain_error("deviation range must be positive");
    const Alpha pi = slope_limit(spec);
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& u : factors(spec, n).members) {
            const Int h(u.height());
            // |h - alpha*n| <= c, split into two one-sided exact comparisons
            if (pi.compare(Rat(h - c, Int(n))) < 0) return false;
            if (pi.compare(Rat(h + c, Int(n))) > 0) return false;
        }
    }
    return true;
}

std::optional<int> disjointness_degree(const WordSpec& a, const WordSpec& b, int max_n) {
    if (max_n < 1) throw std::domain_error("disjointness range must be positive");
    for (int m = 1; m <= max_n; ++m) {
        const auto fa = factors(a, m).members;
        const auto fb = factors(b, m).members;
        bool common = false;
        for (const auto& u : fa) {
            if (fb.count(u)) {
                common = true;
                break;
            }
        }
        if (!common) return m;
    }
    return std::nullopt;
}

} // namespace sturmalg
