#pragma once

#include <string>

#include "ore/diff_poly.hpp"
#include "ore/gcrd.hpp"

namespace ore {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Parse an infix operator expression in the variables t and D, e.g.
// "D^2 + (0.5*t+1.0)*D + 0.3*t + 0.06*t^2 + 0.2". Products follow the Ore
// rule, so "D*t" parses to t*D + 1. Division is rejected except by numeric
// literals.
DiffPoly parse_diff_poly(const std::string& text);
RatDiffPoly parse_diff_poly_exact(const std::string& text);

// Text rendering with coefficients written to the left of powers of D,
// highest power first. precision is the significant-digit count; 17 makes
// render/parse a lossless round trip.
std::string render(const DiffPoly& f, int precision = 6);
std::string render(const Poly<double>& p, int precision = 6, const std::string& var = "t");

// JSON: {"dvar":"D","tvar":"t","coeffs":[[...],[...],...]}, outer index the
// power of D, inner arrays the t-coefficients.
std::string to_json(const DiffPoly& f);
DiffPoly diff_poly_from_json(const std::string& json);

std::string to_json(const GcrdOutcome& outcome);

// Reads a JSON operator file when the argument names an existing file,
// otherwise parses the argument itself (JSON object or infix literal).
DiffPoly load_operator(const std::string& path_or_literal);

}  // namespace ore
