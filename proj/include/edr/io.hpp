#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "edr/edr.hpp"

namespace edr::io {

/// Syntax or well-formedness failure in an input file; carries a 1-based
/// line (0 = not line-oriented, e.g. JSON).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                                  : std::move(message)),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

enum class RingKind { Integers, RationalPoly, PrimePoly };

/// Runtime ring descriptor, parsed from the tag grammar
/// `int | qpoly | fppoly:<p>`; constructing a PrimePoly spec checks that p
/// is prime (trial division) and fits the modular arithmetic bound.
struct RingSpec {
    RingKind kind = RingKind::Integers;
    std::uint64_t p = 0;

    static RingSpec integers() { return {RingKind::Integers, 0}; }
    static RingSpec rational_poly() { return {RingKind::RationalPoly, 0}; }
    static RingSpec prime_poly(std::uint64_t p);
    static RingSpec parse(const std::string& tag);

    std::string tag() const;
    /// Display symbol: Z, Q[x], F<p>[x].
    std::string symbol() const;

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }
};

bool is_prime_u64(std::uint64_t n);

using AnyMatrix = std::variant<Matrix<Int>, Matrix<PolyQ>, Matrix<PolyF>>;

struct MatrixFile {
    RingSpec ring;
    AnyMatrix mat;
};

// Element token syntax: integers as optional-sign decimal; rationals as
// `p/q` or `p`; polynomials as `[c0,c1,...,cn]` ascending (no spaces inside
// a token).
Int parse_int_token(const std::string& tok);
Rat parse_rat_token(const std::string& tok);
PolyQ parse_qpoly_token(const std::string& tok);
PolyF parse_fppoly_token(const std::string& tok, std::uint64_t p);

std::string element_token(const Int& x);
std::string element_token(const Rat& x);
std::string element_token(const PolyQ& x);
std::string element_token(const PolyF& x);

/// Matrix file grammar: line 1 `ring <tag>`, line 2 `<m> <n>`, then m lines
/// of n whitespace-separated entry tokens. Lines starting with `#` are
/// comments.
MatrixFile parse_matrix_file(const std::string& text);
std::string print_matrix_file(const MatrixFile& mf);

struct ComplexFile {
    RingSpec ring;
    std::vector<AnyMatrix> boundaries;  // ordered d_1, d_2, ...
};

/// Complex file: JSON object
/// {"ring": <tag>, "boundaries": [{"m":..., "n":..., "entries":[...]}, ...]}.
/// Entries may be JSON strings in element syntax or plain JSON integers.
ComplexFile parse_complex_file(const std::string& json_text);
std::string print_complex_file(const ComplexFile& cf);

// JSON encodings shared by the CLI (entries as token strings, so exact
// values survive).
std::string matrix_json(const RingSpec& ring, const AnyMatrix& m);

/// A stored Smith triple, the `smith --json` output format:
/// {"ring": <tag>, "d": [tokens], "P": {...}, "Q": {...}}.
struct SmithTripleFile {
    RingSpec ring;
    std::vector<std::string> d;
    AnyMatrix P;
    AnyMatrix Q;
};
SmithTripleFile parse_smith_triple_file(const std::string& json_text);

std::string read_file(const std::string& path);

}  // namespace edr::io
