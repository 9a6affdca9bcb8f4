#include "sturmalg/spec_text.hpp"

#include <cctype>

namespace sturmalg {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    char take() { return text_[pos_++]; }

    bool try_consume(std::string_view lit) {
        if (text_.substr(pos_, lit.size()) != lit) return false;
        pos_ += lit.size();
        return true;
    }

    void expect(std::string_view lit) {
        if (!try_consume(lit))
            throw SpecParseError("expected '" + std::string(lit) + "'", pos_);
    }

    Int integer() {
        const std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SpecParseError("expected integer", start);
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    void expect_done() {
        if (!done()) throw SpecParseError("unexpected trailing input", pos_);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Rat rational_part(Cursor& cur) {
    const std::size_t start = cur.pos();
    const Int num = cur.integer();
    cur.expect("/");
    const Int den = cur.integer();
    if (den == 0) throw SpecParseError("zero denominator", start);
    return Rat(num, den);
}

Alpha alpha_part(Cursor& cur) {
    const std::size_t start = cur.pos();
    if (cur.try_consume("(")) {
        const Int p = cur.integer();
        int sign;
        if (cur.try_consume("+"))
            sign = 1;
        else if (cur.try_consume("-"))
            sign = -1;
        else
            throw SpecParseError("expected '+' or '-'", cur.pos());
        const Int q = cur.integer();
        cur.expect("*sqrt(");
        const std::size_t dpos = cur.pos();
        const Int d = cur.integer();
        cur.expect("))/");
        const std::size_t rpos = cur.pos();
        const Int r = cur.integer();
        try {
            return Alpha::from_surd(p, sign * q, d, r);
        } catch (const std::domain_error& e) {
            const std::string what = e.what();
            const std::size_t pos = what.find('d') != std::string::npos &&
                                            what.find("radicand") != std::string::npos
                                        ? dpos
                                        : (what.find("denominator") != std::string::npos ? rpos
                                                                                         : start);
            throw SpecParseError(what, pos);
        }
    }
    const Rat v = rational_part(cur);
    if (v <= 0 || v >= 1) throw SpecParseError("alpha outside (0,1)", start);
    return Alpha::from_rational(v);
}

} // namespace

WordSpec parse_spec(std::string_view text) {
    Cursor cur(text);
    if (cur.try_consume("periodic:")) {
        const std::size_t start = cur.pos();
        std::string bits;
        while (!cur.done() && (cur.peek() == '0' || cur.peek() == '1')) bits.push_back(cur.take());
        cur.expect_done();
        if (bits.empty()) throw SpecParseError("empty periodic pattern", start);
        return WordSpec::periodic(FiniteWord::parse(bits));
    }
    if (cur.try_consume("mech:")) {
        const std::size_t astart = cur.pos();
        Alpha alpha = alpha_part(cur);
        Rat rho(0);
        if (cur.try_consume(",")) {
            cur.expect("rho=");
            const std::size_t rstart = cur.pos();
            rho = rational_part(cur);
            if (rho < 0 || rho >= 1) throw SpecParseError("rho outside [0,1)", rstart);
        }
        cur.expect_done();
        // surd slopes land in [0,1] by Alpha's own check; enforce openness
        if (alpha.compare(Rat(0)) <= 0 || alpha.compare(Rat(1)) >= 0)
            throw SpecParseError("alpha outside (0,1)", astart);
        return WordSpec::mechanical(std::move(alpha), std::move(rho));
    }
    throw SpecParseError("expected 'periodic:' or 'mech:'", 0);
}

std::string render_spec(const WordSpec& spec) { return spec.render(); }

Rat parse_rational(std::string_view text) {
    Cursor cur(text);
    const Int num = cur.integer();
    if (cur.done()) return Rat(num);
    cur.expect("/");
    const Int den = cur.integer();
    cur.expect_done();
    if (den == 0) throw SpecParseError("zero denominator", 0);
    return Rat(num, den);
}

} // namespace sturmalg
