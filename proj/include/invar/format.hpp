#ifndef INVAR_FORMAT_HPP
#define INVAR_FORMAT_HPP

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "invar/poly.hpp"
#include "invar/ring.hpp"
#include "invar/util.hpp"

namespace invar {

// Text formats.
//
//   ring F2[X0,Y0,X1,Y1] weights [1,1,2,2]
//   X0^2*Y1 + 3*X1
//
// One polynomial per line below the header; `weights [...]` is optional and
// defaults to all 1. Fields are `F<p>` or `Q`. Parser and printer round-trip
// bit-exactly.

struct RingDecl {
    bool is_q = false;
    uint64_t p = 2;
    std::vector<std::string> vars;
    std::vector<Rational> weights;
};

inline RingDecl parse_ring_decl(const std::string& line)
{
    RingDecl d;
    std::string s = trim(line);
    require(s.rfind("ring ", 0) == 0, "ring declaration must start with 'ring ': ", line);
    size_t lb = s.find('[');
    size_t rb = s.find(']', lb == std::string::npos ? 0 : lb);
    require(lb != std::string::npos && rb != std::string::npos, "malformed ring declaration: ", line);
    std::string fld = trim(s.substr(5, lb - 5));
    if (fld == "Q") {
        d.is_q = true;
    } else {
        require(fld.size() >= 2 && fld[0] == 'F', "unknown field '", fld, "'");
        d.is_q = false;
        d.p = static_cast<uint64_t>(BigInt::from_string(fld.substr(1)).to_int64());
    }
    std::string vars = s.substr(lb + 1, rb - lb - 1);
    std::istringstream vs(vars);
    std::string v;
    while (std::getline(vs, v, ','))
        d.vars.push_back(trim(v));
    require(!d.vars.empty(), "ring declaration without variables: ", line);

    std::string rest = trim(s.substr(rb + 1));
    if (!rest.empty()) {
        require(rest.rfind("weights", 0) == 0, "unexpected trailing text in ring declaration: ", line);
        size_t wl = rest.find('[');
        size_t wr = rest.find(']');
        require(wl != std::string::npos && wr != std::string::npos, "malformed weights: ", line);
        std::istringstream ws(rest.substr(wl + 1, wr - wl - 1));
        std::string w;
        while (std::getline(ws, w, ','))
            d.weights.push_back(Rational::from_string(trim(w)));
        require(d.weights.size() == d.vars.size(), "weights count mismatch: ", line);
    }
    return d;
}

template <class F>
std::string print_ring_decl(const Ring<F>& ring)
{
    std::string s = "ring " + ring.field().describe() + "[";
    for (size_t i = 0; i < ring.nvars(); ++i) {
        if (i)
            s += ",";
        s += ring.var_name(i);
    }
    s += "]";
    if (!ring.has_unit_weights()) {
        s += " weights [";
        for (size_t i = 0; i < ring.nvars(); ++i) {
            if (i)
                s += ",";
            s += ring.weights()[i].to_string();
        }
        s += "]";
    }
    return s;
}

namespace detail {

template <class F>
class PolyParser {
public:
    PolyParser(RingPtr<F> ring, const std::string& src) : ring_(std::move(ring)), s_(src) {}

    Polynomial<F> parse()
    {
        Polynomial<F> p = expr();
        skip_ws();
        require(pos_ == s_.size(), "trailing characters in polynomial: '", s_.substr(pos_), "'");
        return p;
    }

private:
    RingPtr<F> ring_;
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c)
    {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial<F> expr()
    {
        Polynomial<F> acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    Polynomial<F> term()
    {
        Polynomial<F> acc = factor();
        while (eat('*'))
            acc = acc * factor();
        return acc;
    }
    Polynomial<F> factor()
    {
        Polynomial<F> b = base();
        if (eat('^')) {
            skip_ws();
            uint32_t n = parse_uint();
            return b.pow(n);
        }
        return b;
    }
    Polynomial<F> base()
    {
        skip_ws();
        require(pos_ < s_.size(), "unexpected end of polynomial");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial<F> p = expr();
            require(eat(')'), "missing ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return variable();
        fail("unexpected character '", std::string(1, c), "' in polynomial");
    }
    Polynomial<F> number()
    {
        std::string digits = take_digits();
        size_t save = pos_;
        if (eat('/')) {
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                std::string den = take_digits();
                return Polynomial<F>::constant(
                    ring_, ring_->field().from_rational(Rational::from_string(digits + "/" + den)));
            }
            pos_ = save;
        }
        return Polynomial<F>::constant(ring_, ring_->field().parse(digits));
    }
    Polynomial<F> variable()
    {
        std::string name;
        while (pos_ < s_.size()
               && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            name += s_[pos_++];
        int idx = ring_->var_index(name);
        require(idx >= 0, "unknown variable '", name, "'");
        return Polynomial<F>::variable(ring_, static_cast<size_t>(idx));
    }
    std::string take_digits()
    {
        skip_ws();
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            d += s_[pos_++];
        require(!d.empty(), "expected number");
        return d;
    }
    uint32_t parse_uint()
    {
        return static_cast<uint32_t>(BigInt::from_string(take_digits()).to_int64());
    }
};

} // namespace detail

template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const std::string& src)
{
    return detail::PolyParser<F>(ring, src).parse();
}

template <class F>
std::string print_polynomial(const Polynomial<F>& p)
{
    if (p.is_zero())
        return "0";
    const F& fld = p.field();
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        std::string cs = fld.to_string(t.c);
        bool negative = !cs.empty() && cs[0] == '-';
        std::string abs = negative ? cs.substr(1) : cs;
        if (first) {
            s += negative ? "-" : "";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        bool unit = abs == "1";
        if (t.m.is_one()) {
            s += abs;
        } else {
            if (!unit)
                s += abs + "*";
            s += p.ring()->monomial_string(t.m);
        }
    }
    return s;
}

// A polynomial file: ring declaration then one polynomial per line. '#' lines
// and blank lines are skipped.
template <class F>
struct PolyFile {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> polys;
};

template <class F>
RingPtr<F> ring_from_decl(const RingDecl& d);

template <>
inline RingPtr<FpField> ring_from_decl<FpField>(const RingDecl& d)
{
    require(!d.is_q, "expected a prime field ring");
    return make_ring(FpField(d.p), d.vars, d.weights);
}
template <>
inline RingPtr<QField> ring_from_decl<QField>(const RingDecl& d)
{
    require(d.is_q, "expected a rational ring");
    return make_ring(QField(), d.vars, d.weights);
}

template <class F>
PolyFile<F> read_poly_stream(std::istream& in)
{
    std::string line;
    RingDecl decl;
    bool have_ring = false;
    PolyFile<F> out;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        if (!have_ring) {
            decl = parse_ring_decl(t);
            out.ring = ring_from_decl<F>(decl);
            have_ring = true;
            continue;
        }
        out.polys.push_back(parse_polynomial(out.ring, t));
    }
    require(have_ring, "polynomial file without ring declaration");
    return out;
}

template <class F>
void write_poly_stream(std::ostream& os, const RingPtr<F>& ring,
                       const std::vector<Polynomial<F>>& polys)
{
    os << print_ring_decl(*ring) << "\n";
    for (const auto& p : polys)
        os << print_polynomial(p) << "\n";
}

inline RingDecl peek_ring_decl(std::istream& in)
{
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        return parse_ring_decl(t);
    }
    fail("polynomial file without ring declaration");
}

} // namespace invar

#endif
