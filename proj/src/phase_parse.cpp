#include "modpair/phases.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace modpair {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : src_(s) {}

    BoundaryPhase parse()
    {
        BoundaryPhase p = spec();
        skip_space();
        if (pos_ != src_.size())
            fail("trailing input");
        return p;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    [[noreturn]] void fail(const std::string& why) const
    {
        std::size_t end = pos_;
        while (end < src_.size() && src_[end] != ',' && src_[end] != ')' && src_[end] != '(')
            ++end;
        std::string tok = src_.substr(pos_, std::max<std::size_t>(end - pos_, 1));
        if (pos_ >= src_.size())
            tok = "<end>";
        throw Error("phase spec: " + why + " at token '" + tok + "' (position "
                    + std::to_string(pos_) + ")");
    }

    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    std::string word()
    {
        skip_space();
        std::size_t b = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        return src_.substr(b, pos_ - b);
    }

    // maximal run of characters that can belong to a number literal
    std::string literal()
    {
        skip_space();
        std::size_t b = pos_;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-'
                || c == 'e' || c == 'E' || c == 'i')
                ++pos_;
            else
                break;
        }
        return src_.substr(b, pos_ - b);
    }

    double real_number()
    {
        std::size_t at = pos_;
        std::string t = literal();
        double v = 0.0;
        auto r = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || r.ec != std::errc() || r.ptr != t.data() + t.size()) {
            pos_ = at;
            fail("malformed number");
        }
        return v;
    }

    static bool to_double(const std::string& t, double& v)
    {
        if (t == "+" || t.empty()) {
            v = 1.0;
            return true;
        }
        if (t == "-") {
            v = -1.0;
            return true;
        }
        const char* b = t.data();
        if (*b == '+')
            ++b;
        auto r = std::from_chars(b, t.data() + t.size(), v);
        return r.ec == std::errc() && r.ptr == t.data() + t.size();
    }

    cplx complex_number()
    {
        std::size_t at = pos_;
        std::string t = literal();
        auto bad = [&]() {
            pos_ = at;
            fail("malformed complex number");
        };
        if (t.empty())
            bad();
        if (t.back() != 'i') {
            double re = 0.0;
            if (!to_double(t, re) || t == "+" || t == "-")
                bad();
            return re;
        }
        std::string body = t.substr(0, t.size() - 1);
        // split at the last sign that is not leading and not an exponent sign
        std::size_t cut = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                cut = k;
                break;
            }
        }
        double re = 0.0, im = 0.0;
        std::string ims = cut == std::string::npos ? body : body.substr(cut);
        if (cut != std::string::npos && !to_double(body.substr(0, cut), re))
            bad();
        if (!to_double(ims, im))
            bad();
        return {re, im};
    }

    bool at_number_start()
    {
        skip_space();
        if (pos_ >= src_.size())
            return false;
        char c = src_[pos_];
        if (c == 'i')
            return pos_ + 1 == src_.size() || !std::isalpha(static_cast<unsigned char>(src_[pos_ + 1]));
        return std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
    }

    BoundaryPhase spec()
    {
        skip_space();
        const std::size_t start = pos_;
        const std::string w = word();
        try {
            if (w == "id")
                return identity_phase();
            if (w == "sinh")
                return sinh_phase();
            if (w == "exp") {
                expect(':');
                return exponential_phase(real_number());
            }
            if (w == "scaling") {
                expect(':');
                return scaling_phase(real_number());
            }
            if (w == "blaschke") {
                expect(':');
                std::vector<cplx> zs{complex_number()};
                for (;;) {
                    std::size_t save = pos_;
                    // inside parentheses a comma separates arguments, so only ';' continues the list
                    if (eat(';') || (depth_ == 0 && eat(','))) {
                        if (at_number_start()) {
                            zs.push_back(complex_number());
                            continue;
                        }
                        pos_ = save;
                    }
                    break;
                }
                return blaschke_phase(std::move(zs));
            }
            if (w == "conj") {
                expect('(');
                ++depth_;
                BoundaryPhase inner = spec();
                expect(')');
                --depth_;
                return conjugate_phase(inner);
            }
            if (w == "prod") {
                expect('(');
                ++depth_;
                std::vector<BoundaryPhase> fs{spec()};
                while (eat(','))
                    fs.push_back(spec());
                expect(')');
                --depth_;
                return product_phase(std::move(fs));
            }
            if (w == "mat") {
                expect('(');
                ++depth_;
                BoundaryPhase a = spec();
                expect(',');
                BoundaryPhase b = spec();
                expect(',');
                double deg = real_number();
                expect(')');
                --depth_;
                return matrix_phase(a, b, deg);
            }
        } catch (const Error& e) {
            std::string m = e.what();
            if (m.rfind("phase spec:", 0) == 0)
                throw;
            pos_ = start;
            fail(m);
        }
        pos_ = start;
        fail("unknown phase kind");
    }
};

// shortest text that reads back to the same double
std::string fmt(double v)
{
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string fmt(cplx z)
{
    std::string s = fmt(z.real());
    s += z.imag() < 0.0 ? "-" : "+";
    s += fmt(std::abs(z.imag())) + "i";
    return s;
}

} // namespace

BoundaryPhase parse_phase(const std::string& spec)
{
    return Parser(spec).parse();
}

std::string format_phase(const BoundaryPhase& phi)
{
    switch (phi.kind) {
    case PhaseKind::identity:
        return "id";
    case PhaseKind::blaschke: {
        std::string s = "blaschke:";
        for (std::size_t i = 0; i < phi.zeros.size(); ++i)
            s += (i ? ";" : "") + fmt(phi.zeros[i]);
        return s;
    }
    case PhaseKind::exponential:
        return "exp:" + fmt(phi.param);
    case PhaseKind::scaling:
        return "scaling:" + fmt(phi.param);
    case PhaseKind::sinh:
        return "sinh";
    case PhaseKind::conjugate:
        return "conj(" + format_phase(phi.parts.front()) + ")";
    case PhaseKind::product: {
        std::string s = "prod(";
        for (std::size_t i = 0; i < phi.parts.size(); ++i)
            s += (i ? "," : "") + format_phase(phi.parts[i]);
        return s + ")";
    }
    case PhaseKind::matrix:
        return "mat(" + format_phase(phi.parts[0]) + "," + format_phase(phi.parts[1]) + ","
               + fmt(phi.param) + ")";
    }
    return "id";
}

} // namespace modpair
