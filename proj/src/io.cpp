#include "ore/io.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ore {
namespace {

// recursive-descent parser over Ore operator values
template <class S>
class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    OreOp<Poly<S>> parse() {
        OreOp<Poly<S>> v = expression();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    OreOp<Poly<S>> expression() {
        OreOp<Poly<S>> v = eat('-') ? -term() : (eat('+'), term());
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    OreOp<Poly<S>> term() {
        OreOp<Poly<S>> v = factor();
        while (true) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                size_t at = pos_;
                OreOp<Poly<S>> divisor = factor();
                if (divisor.deg() != 0 || divisor.coeff(0).degree() > 0)
                    throw ParseError("division is only allowed by numeric literals", at);
                if (divisor.is_zero()) throw ParseError("division by zero", at);
                S inv = ScalarTraits<S>::one() / divisor.coeff(0).coeff(0);
                v = OreOp<Poly<S>>::left_scaled(Poly<S>(inv), v);
            } else {
                return v;
            }
        }
    }
    OreOp<Poly<S>> factor() {
        OreOp<Poly<S>> v = atom();
        if (eat('^')) {
            skip_ws();
            size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected a nonnegative integer exponent", at);
            int e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                e = e * 10 + (s_[pos_++] - '0');
            v = ore_pow(v, e);
        }
        return v;
    }
    OreOp<Poly<S>> atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            OreOp<Poly<S>> v = expression();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == 't') {
            ++pos_;
            return OreOp<Poly<S>>(Poly<S>::variable());
        }
        if (c == 'D') {
            ++pos_;
            return OreOp<Poly<S>>::d();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return OreOp<Poly<S>>(Poly<S>(number()));
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    S number();
};

template <>
double Parser<double>::number() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' || s_[pos_] == 'e' ||
            s_[pos_] == 'E' || ((s_[pos_] == '+' || s_[pos_] == '-') && (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
        ++pos_;
    try {
        size_t used = 0;
        double v = std::stod(s_.substr(start, pos_ - start), &used);
        if (used != pos_ - start) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad numeric literal", start);
    }
}

template <>
Rational Parser<Rational>::number() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' || s_[pos_] == 'e' ||
            s_[pos_] == 'E' || ((s_[pos_] == '+' || s_[pos_] == '-') && (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
        ++pos_;
    try {
        return Rational::from_decimal(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
        throw ParseError("bad numeric literal", start);
    }
}

std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

}  // namespace

DiffPoly parse_diff_poly(const std::string& text) { return Parser<double>(text).parse(); }
RatDiffPoly parse_diff_poly_exact(const std::string& text) { return Parser<Rational>(text).parse(); }

std::string render(const Poly<double>& p, int precision, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        double c = p.coeff(i);
        if (c == 0.0) continue;
        if (!out.empty()) {
            out += c < 0 ? "-" : "+";
            c = std::abs(c);
        } else if (c < 0) {
            out += "-";
            c = -c;
        }
        if (i == 0 || c != 1.0) {
            out += format_double(c, precision);
            if (i > 0) out += "*";
        }
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string render(const DiffPoly& f, int precision) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.deg(); i >= 0; --i) {
        const Poly<double>& c = f.coeff(i);
        if (c.is_zero()) continue;
        std::string dpow = i == 0 ? "" : (i == 1 ? "D" : "D^" + std::to_string(i));
        std::string term;
        bool negative = false;
        if (i == 0) {
            term = render(c, precision);
            negative = term[0] == '-';
            if (negative) term = term.substr(1);
        } else if (c.degree() == 0) {
            double v = c.coeff(0);
            negative = v < 0;
            double a = std::abs(v);
            term = (a == 1.0 ? "" : format_double(a, precision) + "*") + dpow;
        } else {
            term = "(" + render(c, precision) + ")*" + dpow;
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        out += term;
    }
    return out;
}

std::string to_json(const DiffPoly& f) {
    nlohmann::json j;
    j["dvar"] = "D";
    j["tvar"] = "t";
    auto coeffs = nlohmann::json::array();
    for (int i = 0; i <= f.deg(); ++i) {
        auto c = nlohmann::json::array();
        for (int k = 0; k <= std::max(f.coeff(i).degree(), -1); ++k) c.push_back(f.coeff(i).coeff(k));
        coeffs.push_back(std::move(c));
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

DiffPoly diff_poly_from_json(const std::string& json) {
    nlohmann::json j = nlohmann::json::parse(json);
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("operator JSON needs a 'coeffs' array");
    std::vector<Poly<double>> coeffs;
    for (const auto& arr : j["coeffs"]) {
        std::vector<double> c;
        for (const auto& v : arr) c.push_back(v.get<double>());
        coeffs.emplace_back(std::move(c));
    }
    return DiffPoly(std::move(coeffs));
}

std::string to_json(const GcrdOutcome& outcome) {
    nlohmann::json j;
    j["kind"] = outcome.kind == GcrdOutcome::Kind::kFound ? "found" : "coprime";
    j["degree"] = outcome.degree;
    if (outcome.kind == GcrdOutcome::Kind::kFound) {
        j["gcrd"] = nlohmann::json::parse(to_json(outcome.gcrd));
        j["residual"] = outcome.residual;
        j["content_inexact"] = outcome.content_inexact;
    }
    if (outcome.has_perturbed_pair) {
        j["perturbation_f"] = outcome.perturbation_f;
        j["perturbation_g"] = outcome.perturbation_g;
        j["f_tilde"] = nlohmann::json::parse(to_json(outcome.f_tilde));
        j["g_tilde"] = nlohmann::json::parse(to_json(outcome.g_tilde));
    }
    j["singular_values"] = outcome.singular_values;
    return j.dump();
}

DiffPoly load_operator(const std::string& path_or_literal) {
    std::error_code ec;
    if (std::filesystem::exists(path_or_literal, ec)) {
        std::ifstream in(path_or_literal);
        if (!in) throw std::runtime_error("cannot open operator file: " + path_or_literal);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string body = ss.str();
        size_t i = body.find_first_not_of(" \t\r\n");
        if (i != std::string::npos && body[i] == '{') return diff_poly_from_json(body);
        return parse_diff_poly(body);
    }
    size_t i = path_or_literal.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && path_or_literal[i] == '{') return diff_poly_from_json(path_or_literal);
    return parse_diff_poly(path_or_literal);
}

}  // namespace ore
