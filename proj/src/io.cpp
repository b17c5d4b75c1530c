#include "edr/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>

namespace edr::io {

using nlohmann::json;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RingSpec RingSpec::prime_poly(std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 32))
        throw ParseError("fppoly modulus too large (must be < 2^32)");
    if (!is_prime_u64(p)) throw ParseError("fppoly modulus " + std::to_string(p) + " is not prime");
    return {RingKind::PrimePoly, p};
}

RingSpec RingSpec::parse(const std::string& tag) {
    if (tag == "int") return integers();
    if (tag == "qpoly") return rational_poly();
    if (tag.rfind("fppoly:", 0) == 0) {
        const std::string digits = tag.substr(7);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad fppoly modulus in ring tag '" + tag + "'");
        return prime_poly(std::stoull(digits));
    }
    throw ParseError("unknown ring tag '" + tag + "'");
}

std::string RingSpec::tag() const {
    switch (kind) {
        case RingKind::Integers: return "int";
        case RingKind::RationalPoly: return "qpoly";
        case RingKind::PrimePoly: return "fppoly:" + std::to_string(p);
    }
    return "?";
}

std::string RingSpec::symbol() const {
    switch (kind) {
        case RingKind::Integers: return "Z";
        case RingKind::RationalPoly: return "Q[x]";
        case RingKind::PrimePoly: return "F" + std::to_string(p) + "[x]";
    }
    return "?";
}

namespace {

bool valid_int_token(const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return t.find_first_not_of("0123456789", i) == std::string::npos;
}

std::vector<std::string> split_coeffs(const std::string& tok) {
    // tok is known to start with '[' and end with ']'
    std::string inner = tok.substr(1, tok.size() - 2);
    std::vector<std::string> out;
    if (inner.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = inner.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(inner.substr(start));
            break;
        }
        out.push_back(inner.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

}  // namespace

Int parse_int_token(const std::string& tok) {
    if (!valid_int_token(tok)) throw ParseError("bad integer token '" + tok + "'");
    return Int(Int::rep(tok));
}

Rat parse_rat_token(const std::string& tok) {
    std::size_t slash = tok.find('/');
    if (slash == std::string::npos) return Rat(Int::rep(parse_int_token(tok).value()));
    Int num = parse_int_token(tok.substr(0, slash));
    Int den = parse_int_token(tok.substr(slash + 1));
    if (is_zero(den)) throw ParseError("zero denominator in '" + tok + "'");
    return Rat(num, den);
}

PolyQ parse_qpoly_token(const std::string& tok) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        throw ParseError("bad polynomial token '" + tok + "' (expected [c0,c1,...])");
    std::vector<Rat> cs;
    for (const std::string& c : split_coeffs(tok)) cs.push_back(parse_rat_token(c));
    return PolyQ(std::move(cs));
}

PolyF parse_fppoly_token(const std::string& tok, std::uint64_t p) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        throw ParseError("bad polynomial token '" + tok + "' (expected [c0,c1,...])");
    std::vector<Fp> cs;
    for (const std::string& c : split_coeffs(tok)) {
        Int v = parse_int_token(c);
        Int r = ediv(v, Int(static_cast<long long>(p))).second;  // nonnegative residue
        cs.emplace_back(static_cast<long long>(r.value()), p);
    }
    return PolyF(std::move(cs));
}

std::string element_token(const Int& x) { return to_string(x); }
std::string element_token(const Rat& x) { return to_string(x); }
std::string element_token(const PolyQ& x) { return to_string(x); }
std::string element_token(const PolyF& x) { return to_string(x); }

namespace {

struct Lines {
    std::vector<std::pair<std::size_t, std::string>> content;  // (1-based line no, text)
};

Lines significant_lines(const std::string& text) {
    Lines out;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;   // blank
        if (line[first] == '#') continue;           // comment
        out.content.emplace_back(no, line);
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

template <class T, class ParseTok>
Matrix<T> parse_rows(const Lines& lines, std::size_t start, std::size_t m, std::size_t n,
                     ParseTok&& parse_tok) {
    std::vector<T> entries;
    entries.reserve(m * n);
    for (std::size_t r = 0; r < m; ++r) {
        if (start + r >= lines.content.size())
            throw ParseError("expected " + std::to_string(m) + " rows, found " + std::to_string(r),
                             lines.content.empty() ? 0 : lines.content.back().first);
        const auto& [no, text] = lines.content[start + r];
        std::vector<std::string> toks = split_ws(text);
        if (toks.size() != n)
            throw ParseError("expected " + std::to_string(n) + " entries, found " +
                                 std::to_string(toks.size()),
                             no);
        for (const std::string& t : toks) {
            try {
                entries.push_back(parse_tok(t));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), no);
            }
        }
    }
    return Matrix<T>(m, n, std::move(entries));
}

AnyMatrix parse_tokens_matrix(const RingSpec& ring, const Lines& lines, std::size_t start,
                              std::size_t m, std::size_t n) {
    switch (ring.kind) {
        case RingKind::Integers:
            return parse_rows<Int>(lines, start, m, n,
                                   [](const std::string& t) { return parse_int_token(t); });
        case RingKind::RationalPoly:
            return parse_rows<PolyQ>(lines, start, m, n,
                                     [](const std::string& t) { return parse_qpoly_token(t); });
        case RingKind::PrimePoly:
            return parse_rows<PolyF>(lines, start, m, n, [&](const std::string& t) {
                return parse_fppoly_token(t, ring.p);
            });
    }
    throw ParseError("unreachable ring kind");
}

}  // namespace

MatrixFile parse_matrix_file(const std::string& text) {
    Lines lines = significant_lines(text);
    if (lines.content.size() < 2) throw ParseError("matrix file needs a ring line and a size line");
    const auto& [rno, rline] = lines.content[0];
    std::vector<std::string> rtoks = split_ws(rline);
    if (rtoks.size() != 2 || rtoks[0] != "ring")
        throw ParseError("expected 'ring <int|qpoly|fppoly:<p>>'", rno);
    RingSpec ring;
    try {
        ring = RingSpec::parse(rtoks[1]);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), rno);
    }
    const auto& [sno, sline] = lines.content[1];
    std::vector<std::string> stoks = split_ws(sline);
    if (stoks.size() != 2 || !valid_int_token(stoks[0]) || !valid_int_token(stoks[1]) ||
        stoks[0][0] == '-' || stoks[1][0] == '-')
        throw ParseError("expected '<m> <n>'", sno);
    std::size_t m = std::stoull(stoks[0]), n = std::stoull(stoks[1]);
    if (lines.content.size() != 2 + m)
        throw ParseError("expected " + std::to_string(m) + " entry rows, found " +
                         std::to_string(lines.content.size() - 2));
    return {ring, parse_tokens_matrix(ring, lines, 2, m, n)};
}

namespace {

template <class T>
std::string print_rows(const Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += element_token(m(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string print_matrix_file(const MatrixFile& mf) {
    std::string out = "ring " + mf.ring.tag() + "\n";
    std::visit(
        [&](const auto& m) {
            out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
            out += print_rows(m);
        },
        mf.mat);
    return out;
}

namespace {

std::string entry_to_token(const json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<long long>());
    throw ParseError("matrix entry must be a string token or an integer");
}

AnyMatrix json_to_matrix(const RingSpec& ring, const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix object needs fields m, n, entries");
    std::size_t m = j.at("m").get<std::size_t>();
    std::size_t n = j.at("n").get<std::size_t>();
    const json& es = j.at("entries");
    if (!es.is_array() || es.size() != m * n)
        throw ParseError("matrix entries array must have m*n elements");
    auto build = [&](auto parse_tok) -> AnyMatrix {
        using T = decltype(parse_tok(std::string{}));
        std::vector<T> entries;
        entries.reserve(m * n);
        for (const json& e : es) entries.push_back(parse_tok(entry_to_token(e)));
        return Matrix<T>(m, n, std::move(entries));
    };
    switch (ring.kind) {
        case RingKind::Integers:
            return build([](const std::string& t) { return parse_int_token(t); });
        case RingKind::RationalPoly:
            return build([](const std::string& t) { return parse_qpoly_token(t); });
        case RingKind::PrimePoly:
            return build([&](const std::string& t) { return parse_fppoly_token(t, ring.p); });
    }
    throw ParseError("unreachable ring kind");
}

json matrix_to_json_obj(const AnyMatrix& am) {
    json j;
    std::visit(
        [&](const auto& m) {
            j["m"] = m.rows();
            j["n"] = m.cols();
            json es = json::array();
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t k = 0; k < m.cols(); ++k) es.push_back(element_token(m(i, k)));
            j["entries"] = std::move(es);
        },
        am);
    return j;
}

}  // namespace

ComplexFile parse_complex_file(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ring") || !j.contains("boundaries"))
        throw ParseError("complex file needs fields ring, boundaries");
    RingSpec ring = RingSpec::parse(j.at("ring").get<std::string>());
    const json& bs = j.at("boundaries");
    if (!bs.is_array() || bs.empty())
        throw ParseError("complex file needs a nonempty boundaries array");
    ComplexFile cf{ring, {}};
    for (const json& b : bs) cf.boundaries.push_back(json_to_matrix(ring, b));
    return cf;
}

std::string print_complex_file(const ComplexFile& cf) {
    json j;
    j["ring"] = cf.ring.tag();
    json bs = json::array();
    for (const AnyMatrix& b : cf.boundaries) bs.push_back(matrix_to_json_obj(b));
    j["boundaries"] = std::move(bs);
    return j.dump(2) + "\n";
}

std::string matrix_json(const RingSpec&, const AnyMatrix& m) {
    return matrix_to_json_obj(m).dump();
}

SmithTripleFile parse_smith_triple_file(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ring") || !j.contains("d") || !j.contains("P") ||
        !j.contains("Q"))
        throw ParseError("smith triple needs fields ring, d, P, Q");
    RingSpec ring = RingSpec::parse(j.at("ring").get<std::string>());
    SmithTripleFile out{ring, {}, json_to_matrix(ring, j.at("P")), json_to_matrix(ring, j.at("Q"))};
    for (const json& t : j.at("d")) out.d.push_back(entry_to_token(t));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace edr::io
