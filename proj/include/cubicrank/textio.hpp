#ifndef CUBICRANK_TEXTIO_HPP
#define CUBICRANK_TEXTIO_HPP

// Text front end for the exact types: an expression parser for polynomials
// in x, y, z and printers whose output parses back to the same coefficients.
//
// Accepted grammar, whitespace-insensitive:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor | factor)*   adjacency multiplies
//   factor := atom ('^' digits)*
//   atom   := digits | 'x' | 'y' | 'z' | 'sqrt' '(' digits ')' | '(' expr ')'
//
// so "6xyz", "18y(x^2+yz)", and "x^3/2 + (1/2+1/2*sqrt(5))*y^3" all work.
// Division requires a nonzero constant divisor.  Radicals must be squarefree
// integers above one, and a single expression may use only one of them.

#include <stdexcept>
#include <string>

#include "cubicrank/forms.hpp"

namespace cubicrank {

// Malformed input; position() is the offending 0-based offset in the text.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// The expression parsed but is not homogeneous of degree three.
class NotHomogeneousDegree3 : public std::runtime_error {
public:
    explicit NotHomogeneousDegree3(const std::string& what);
};

// sqrt(d) with d not squarefree and above one, or two distinct radicands
// in one expression.
class UnsupportedRadical : public std::runtime_error {
public:
    explicit UnsupportedRadical(const std::string& what);
};

TernaryCubic parse_cubic(const std::string& text);

// Same grammar in x and y alone; any z is rejected where it appears.
BinaryCubic parse_binary_cubic(const std::string& text);

// Exact renderings; "0" for the zero form.  Radical coefficients are
// parenthesized, e.g. "(1/2+1/2*sqrt(5))*x^2*y".
std::string to_string(const LinearForm& l);
std::string to_string(const TernaryQuadratic& f);
std::string to_string(const TernaryCubic& f);
std::string to_string(const BinaryCubic& f);

} // namespace cubicrank

#endif
