#include "edr/commands.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <type_traits>

namespace edr::cli {

using nlohmann::json;
using io::AnyMatrix;
using io::MatrixFile;
using io::RingSpec;

namespace {

std::string torsion_symbol(const RingSpec& ring, const std::string& token) {
    if (ring.kind == io::RingKind::Integers) return "Z/" + token;
    return ring.symbol() + "/(" + token + ")";
}

}  // namespace

std::string render_decomposition(const RingSpec& ring, std::size_t free_rank,
                                 const std::vector<std::string>& torsion_tokens) {
    std::vector<std::string> parts;
    if (free_rank == 1)
        parts.push_back(ring.symbol());
    else if (free_rank > 1)
        parts.push_back(ring.symbol() + "^" + std::to_string(free_rank));
    for (const std::string& t : torsion_tokens) parts.push_back(torsion_symbol(ring, t));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

namespace {

template <class T>
T parse_element(const RingSpec& ring, const std::string& tok) {
    if constexpr (std::is_same_v<T, Int>) {
        return io::parse_int_token(tok);
    } else if constexpr (std::is_same_v<T, PolyQ>) {
        return io::parse_qpoly_token(tok);
    } else {
        return io::parse_fppoly_token(tok, ring.p);
    }
}

SmithStrategy strategy_for(const RingSpec&, const Options& opts) {
    // every built-in ring is Euclidean, so the default strategy is euclidean
    return opts.strategy.value_or(SmithStrategy::Euclidean);
}

json matrix_obj(const RingSpec& ring, const AnyMatrix& m) {
    return json::parse(io::matrix_json(ring, m));
}

template <class T>
std::vector<std::string> tokens_of(const std::vector<T>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const T& x : xs) out.push_back(io::element_token(x));
    return out;
}

std::string bracket_list(const std::vector<std::string>& toks) {
    std::string s = "[";
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i) s += ", ";
        s += toks[i];
    }
    return s + "]";
}

template <class T>
void print_matrix_body(std::ostream& out, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << io::element_token(m(i, j));
        }
        out << '\n';
    }
}

template <class T>
void print_transition(std::ostream& out, const char* name, const Matrix<T>& m, bool full) {
    if (!full && (m.rows() > 10 || m.cols() > 10)) {
        out << name << ": suppressed (" << m.rows() << "x" << m.cols() << "; use --full)\n";
        return;
    }
    out << name << ":\n";
    print_matrix_body(out, m);
}

int cmd_smith(const MatrixFile& mf, const Options& opts, std::ostream& out) {
    SmithStrategy strat = strategy_for(mf.ring, opts);
    return std::visit(
        [&](const auto& m) -> int {
            auto r = smith(m, strat);
            if (!verify_smith(m, r).ok())
                internal_violation("smith result failed its own verification");
            if (opts.json) {
                json j;
                j["ring"] = mf.ring.tag();
                j["strategy"] = to_string(strat);
                j["m"] = m.rows();
                j["n"] = m.cols();
                j["d"] = tokens_of(r.d);
                j["P"] = matrix_obj(mf.ring, AnyMatrix(r.P));
                j["Q"] = matrix_obj(mf.ring, AnyMatrix(r.Q));
                j["verified"] = true;
                out << j.dump(2) << '\n';
            } else {
                out << "d: " << bracket_list(tokens_of(r.d)) << '\n';
                print_transition(out, "P", r.P, opts.full);
                print_transition(out, "Q", r.Q, opts.full);
            }
            return kExitOk;
        },
        mf.mat);
}

int cmd_verify(const MatrixFile& mf, const io::SmithTripleFile& tf, const Options& opts,
               std::ostream& out) {
    if (!(mf.ring == tf.ring)) throw io::ParseError("matrix and triple use different rings");
    return std::visit(
        [&](const auto& m) -> int {
            using M = std::decay_t<decltype(m)>;
            using T = typename M::value_type;
            SmithResult<T> r;
            r.P = std::get<M>(tf.P);
            r.Q = std::get<M>(tf.Q);
            for (const std::string& t : tf.d) r.d.push_back(parse_element<T>(mf.ring, t));
            auto v = verify_smith(m, r);
            if (opts.json) {
                json j;
                j["product"] = v.product_equal;
                j["divisibility"] = v.divisibility_sorted;
                j["P_unit"] = v.p_unit;
                j["Q_unit"] = v.q_unit;
                j["factors_nonzero"] = v.d_nonzero;
                j["factors_canonical"] = v.d_canonical;
                j["ok"] = v.ok();
                out << j.dump(2) << '\n';
            } else {
                auto line = [&](const char* name, bool ok) {
                    out << name << ": " << (ok ? "ok" : "FAIL") << '\n';
                };
                line("product", v.product_equal);
                line("divisibility", v.divisibility_sorted);
                line("P-unit", v.p_unit);
                line("Q-unit", v.q_unit);
                line("factors-nonzero", v.d_nonzero);
                line("factors-canonical", v.d_canonical);
                out << "verdict: " << (v.ok() ? "PASS" : "FAIL") << '\n';
            }
            return v.ok() ? kExitOk : kExitNegative;
        },
        mf.mat);
}

int cmd_rank(const MatrixFile& mf, const Options& opts, std::ostream& out) {
    return std::visit(
        [&](const auto& m) -> int {
            std::size_t r = mxrank(m);
            if (opts.json)
                out << json{{"rank", r}}.dump() << '\n';
            else
                out << "rank: " << r << '\n';
            return kExitOk;
        },
        mf.mat);
}

int cmd_kernel(const MatrixFile& mf, const Options& opts, std::ostream& out, bool co) {
    return std::visit(
        [&](const auto& m) -> int {
            auto k = co ? cokermx(m) : kermx(m);
            if (opts.json) {
                json j;
                j["ring"] = mf.ring.tag();
                j[co ? "cokernel" : "kernel"] = matrix_obj(mf.ring, AnyMatrix(k));
                out << j.dump(2) << '\n';
            } else {
                out << io::print_matrix_file({mf.ring, AnyMatrix(k)});
            }
            return kExitOk;
        },
        mf.mat);
}

int cmd_solve(const MatrixFile& mfile, const MatrixFile& bfile, const Options& opts,
              std::ostream& out) {
    if (!(mfile.ring == bfile.ring)) throw io::ParseError("M and B use different rings");
    return std::visit(
        [&](const auto& m) -> int {
            using M = std::decay_t<decltype(m)>;
            const M& b = std::get<M>(bfile.mat);
            auto x = solve_xm_eq_b(m, b);
            if (opts.json) {
                json j;
                j["solvable"] = x.has_value();
                if (x) {
                    j["ring"] = mfile.ring.tag();
                    j["X"] = matrix_obj(mfile.ring, AnyMatrix(*x));
                }
                out << j.dump(2) << '\n';
            } else if (x) {
                out << io::print_matrix_file({mfile.ring, AnyMatrix(*x)});
            } else {
                out << "unsolvable\n";
            }
            return x ? kExitOk : kExitNegative;
        },
        mfile.mat);
}

int cmd_iso(const MatrixFile& afile, const MatrixFile& bfile, const Options& opts,
            std::ostream& out) {
    if (!(afile.ring == bfile.ring)) throw io::ParseError("presentations use different rings");
    return std::visit(
        [&](const auto& ma) -> int {
            using M = std::decay_t<decltype(ma)>;
            using T = typename M::value_type;
            const M& mb = std::get<M>(bfile.mat);
            auto da = decompose(Presentation<T>{ma});
            auto db = decompose(Presentation<T>{mb});
            bool iso = (da == db);
            if (opts.json) {
                json j;
                j["A"] = {{"free_rank", da.free_rank}, {"torsion", tokens_of(da.torsion)},
                          {"display", render_decomposition(afile.ring, da.free_rank,
                                                           tokens_of(da.torsion))}};
                j["B"] = {{"free_rank", db.free_rank}, {"torsion", tokens_of(db.torsion)},
                          {"display", render_decomposition(afile.ring, db.free_rank,
                                                           tokens_of(db.torsion))}};
                j["isomorphic"] = iso;
                out << j.dump(2) << '\n';
            } else {
                out << "A: "
                    << render_decomposition(afile.ring, da.free_rank, tokens_of(da.torsion))
                    << '\n';
                out << "B: "
                    << render_decomposition(afile.ring, db.free_rank, tokens_of(db.torsion))
                    << '\n';
                out << (iso ? "isomorphic" : "not isomorphic") << '\n';
            }
            return iso ? kExitOk : kExitNegative;
        },
        afile.mat);
}

int cmd_homology(const io::ComplexFile& cf, const Options& opts, std::ostream& out) {
    if (!opts.all_degrees && !opts.degree)
        throw io::ParseError("homology needs --degree <k> or --all");
    if (opts.degree && *opts.degree < 0) throw io::ParseError("homology degree must be >= 0");
    return std::visit(
        [&](const auto& first) -> int {
            using M = std::decay_t<decltype(first)>;
            using T = typename M::value_type;
            std::vector<Matrix<T>> bs;
            for (const AnyMatrix& b : cf.boundaries) bs.push_back(std::get<M>(b));
            ChainComplex<T> complex(std::move(bs));
            std::vector<std::size_t> degrees;
            if (opts.all_degrees)
                for (std::size_t k = 0; k <= complex.top_degree(); ++k) degrees.push_back(k);
            else
                degrees.push_back(static_cast<std::size_t>(*opts.degree));
            json jlist = json::array();
            for (std::size_t k : degrees) {
                auto h = homology(complex, k);
                auto toks = tokens_of(h.torsion);
                std::string disp = render_decomposition(cf.ring, h.free_rank, toks);
                if (opts.json) {
                    json e;
                    e["degree"] = k;
                    e["free_rank"] = h.free_rank;
                    json torsion = json::array();
                    for (const std::string& t : toks)
                        torsion.push_back(torsion_symbol(cf.ring, t));
                    e["torsion"] = std::move(torsion);
                    e["display"] = disp;
                    jlist.push_back(std::move(e));
                } else {
                    out << 'H' << k << ": " << disp << '\n';
                }
            }
            if (opts.json) {
                json j;
                j["ring"] = cf.ring.tag();
                j["homology"] = std::move(jlist);
                out << j.dump(2) << '\n';
            }
            return kExitOk;
        },
        cf.boundaries.front());
}

}  // namespace

namespace {

int dispatch_one(const std::string& command, const std::vector<std::string>& files,
                 const Options& opts, std::ostream& out) {
    auto matrix_arg = [&](std::size_t i) { return io::parse_matrix_file(io::read_file(files[i])); };
    if (command == "smith") return cmd_smith(matrix_arg(0), opts, out);
    if (command == "verify")
        return cmd_verify(matrix_arg(0), io::parse_smith_triple_file(io::read_file(files[1])),
                          opts, out);
    if (command == "rank") return cmd_rank(matrix_arg(0), opts, out);
    if (command == "kernel") return cmd_kernel(matrix_arg(0), opts, out, false);
    if (command == "cokernel") return cmd_kernel(matrix_arg(0), opts, out, true);
    if (command == "solve") return cmd_solve(matrix_arg(0), matrix_arg(1), opts, out);
    if (command == "iso") return cmd_iso(matrix_arg(0), matrix_arg(1), opts, out);
    if (command == "homology")
        return cmd_homology(io::parse_complex_file(io::read_file(files[0])), opts, out);
    throw io::ParseError("unknown command '" + command + "'");
}

std::size_t command_arity(const std::string& command) {
    if (command == "verify" || command == "solve" || command == "iso") return 2;
    return 1;
}

}  // namespace

int run_command(const std::string& command, const std::vector<std::string>& files,
                const Options& opts, std::ostream& out, std::ostream& err) {
    try {
        const std::size_t arity = command_arity(command);
        if (opts.each && arity == 1) {
            if (files.empty()) throw io::ParseError("no input files");
            int worst = kExitOk;
            for (const std::string& f : files) {
                out << "== " << f << '\n';
                worst = std::max(worst, dispatch_one(command, {f}, opts, out));
            }
            return worst;
        }
        if (files.size() != arity)
            throw io::ParseError(command + " expects " + std::to_string(arity) +
                                 " file argument(s)");
        return dispatch_one(command, files, opts, out);
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const CapabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace edr::cli
