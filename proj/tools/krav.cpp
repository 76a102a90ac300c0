// krav — exact Krawtchouk transform toolbox.
//
// Subcommands: gen, inverse, verify, transform, sympower, multi, code.
// All values are exact rationals in "num/den" notation; output is JSON with
// sorted keys (default) or CSV. Exit codes: 0 success / all checks pass,
// 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "krawtchouk/coding.hpp"
#include "krawtchouk/io.hpp"
#include "krawtchouk/multivariate.hpp"
#include "krawtchouk/nilpotent.hpp"
#include "krawtchouk/operator_calculus.hpp"
#include "krawtchouk/univariate.hpp"

namespace kw = krawtchouk;
using kw::Rational;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void emit_matrix(const kw::DenseMatrix& m, const std::string& format, const std::string& out) {
    write_output(format == "csv" ? kw::matrix_to_csv(m) : render_json(kw::matrix_to_json(m)), out);
}

void emit_vector(const std::vector<Rational>& v, const std::string& format, const std::string& out) {
    write_output(format == "csv" ? kw::vector_to_csv(v) + "\n" : render_json(kw::vector_to_json(v)),
                 out);
}

kw::DenseMatrix load_matrix_arg(const std::string& path) { return kw::load_matrix(path); }

std::vector<std::vector<unsigned>> integer_rows(const kw::DenseMatrix& m, unsigned modulus) {
    std::vector<std::vector<unsigned>> rows(m.rows(), std::vector<unsigned>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& e = m(i, j);
            if (denominator(e) != 1)
                throw std::domain_error("expected integer entry, got " + kw::to_string(e));
            kw::BigInt v = numerator(e) % modulus;
            if (v < 0) v += modulus;
            rows[i][j] = static_cast<unsigned>(v);
        }
    }
    return rows;
}

std::vector<kw::Word> words_from_matrix(const kw::DenseMatrix& m, unsigned alphabet) {
    std::vector<kw::Word> words(m.rows(), kw::Word(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& e = m(i, j);
            if (denominator(e) != 1 || numerator(e) < 0 || numerator(e) >= alphabet)
                throw std::domain_error("word symbol out of range: " + kw::to_string(e));
            words[i][j] = static_cast<std::uint8_t>(numerator(e));
        }
    }
    return words;
}

struct BuiltinInstance {
    kw::DenseMatrix base;
    std::vector<Rational> probabilities;
};

// Demo instances: a two-variable system with a non-uniform distribution and
// a three-variable reflection-based system with the uniform one.
BuiltinInstance builtin_instance(const std::string& name) {
    if (name == "two-variable") {
        kw::DenseMatrix a(3, 3);
        const int rows[3][3] = {{1, 1, 1}, {1, -1, 0}, {1, 1, -2}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = rows[i][j];
        return {a, {Rational(1, 3), Rational(1, 2), Rational(1, 6)}};
    }
    if (name == "three-variable") {
        kw::DenseMatrix a(4, 4);
        const int rows[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = rows[i][j];
        return {a, std::vector<Rational>(4, Rational(1, 4))};
    }
    throw std::domain_error("unknown builtin example: " + name +
                            " (expected two-variable or three-variable)");
}

class CheckReport {
public:
    void record(const std::string& name, std::size_t defect_nonzeros, const std::string& detail = "") {
        const bool pass = defect_nonzeros == 0;
        all_pass_ &= pass;
        std::cout << (pass ? "PASS " : "FAIL ") << name << " defect_nonzeros=" << defect_nonzeros;
        if (!detail.empty()) std::cout << ' ' << detail;
        std::cout << '\n';
    }

    int exit_code() const { return all_pass_ ? kExitOk : kExitCheckFailed; }

private:
    bool all_pass_ = true;
};

std::string describe_power_of_two(const Rational& value) {
    // value = +-2^k for the determinant report
    kw::BigInt mag = numerator(value) < 0 ? kw::BigInt(-numerator(value)) : numerator(value);
    unsigned exponent = 0;
    while (mag % 2 == 0 && mag > 1) {
        mag /= 2;
        ++exponent;
    }
    if (mag != 1 || denominator(value) != 1) return kw::to_string(value);
    return std::string(numerator(value) < 0 ? "-" : "+") + "2^" + std::to_string(exponent);
}

void verify_univariate_identity(CheckReport& report, const std::string& identity,
                                const kw::KravchukBasis& basis, unsigned order) {
    const std::string tag =
        identity + " N=" + std::to_string(basis.level) + " p=" + kw::to_string(basis.p);
    if (identity == "orthogonality") {
        report.record(tag, kw::orthogonality_defect(basis).nonzero_count());
    } else if (identity == "inverse") {
        const kw::DenseMatrix inv = kw::inverse_kravchuk(basis);
        const kw::DenseMatrix identity_matrix = kw::DenseMatrix::identity(basis.size());
        std::size_t defect = (inv * basis.phi - identity_matrix).nonzero_count() +
                             (basis.phi * inv - identity_matrix).nonzero_count() +
                             (inv - kw::involution_inverse(basis)).nonzero_count();
        report.record(tag, defect);
    } else if (identity == "involution") {
        report.record(tag, kw::involution_identity(basis).defect.nonzero_count());
    } else if (identity == "determinant") {
        const Rational det = kw::determinant_phi(basis);
        const Rational expected =
            kw::pow_rational(Rational(2), static_cast<long long>(basis.level) *
                                              (static_cast<long long>(basis.level) + 1) / 2) *
            kw::expected_determinant_sign(basis.level);
        report.record(tag, det == expected ? 0 : 1, "det=" + describe_power_of_two(det));
    } else if (identity == "appell") {
        const unsigned effective_order = order > 0 ? order : (basis.level > 0 ? basis.level : 1);
        const kw::AppellFunctions appell = kw::appell_functions(basis.p, effective_order);
        std::size_t defect =
            (appell.v.compose(appell.u) - kw::TruncatedSeries::variable(effective_order)).is_zero()
                ? 0
                : 1;
        const unsigned grid_order = std::min(effective_order, basis.level);
        if (grid_order >= 1) {
            for (unsigned j = 0; j <= basis.level; ++j) {
                const kw::TruncatedSeries d =
                    kw::appell_identity_defect(basis.p, basis.level, j, grid_order);
                for (unsigned k = 0; k <= d.order(); ++k)
                    if (d[k] != 0) ++defect;
            }
        }
        report.record(tag, defect, "order=" + std::to_string(effective_order));
    } else {
        throw std::domain_error("identity " + identity + " needs --N/--p instance flags");
    }
}

int run_verify(const std::string& identity, std::optional<unsigned> level,
               const std::string& p_text, unsigned order, const std::string& basis_path,
               const std::string& matrix_path, const std::string& probs_text,
               unsigned multi_level, const std::string& example) {
    CheckReport report;

    if (identity == "transpose-lemma") {
        const kw::DenseMatrix a = load_matrix_arg(matrix_path);
        const std::size_t defect = kw::transpose_lemma_defect(a, multi_level).nonzero_count();
        report.record("transpose-lemma level=" + std::to_string(multi_level), defect);
        return report.exit_code();
    }

    if (identity == "eq3") {
        kw::DenseMatrix a;
        std::vector<Rational> probs;
        if (!example.empty()) {
            BuiltinInstance instance = builtin_instance(example);
            a = std::move(instance.base);
            probs = std::move(instance.probabilities);
        } else {
            if (matrix_path.empty() || probs_text.empty())
                throw std::domain_error("eq3 needs --example or both --file and --probs");
            a = load_matrix_arg(matrix_path);
            probs = kw::parse_rational_list(probs_text);
        }
        const kw::MultivariateKravchuk mk = kw::build_multivariate(a, probs, multi_level);
        const std::size_t defect = kw::multivariate_orthogonality_defect(mk).nonzero_count();
        report.record("eq3 level=" + std::to_string(multi_level), defect);
        return report.exit_code();
    }

    kw::KravchukBasis basis;
    if (!basis_path.empty()) {
        std::ifstream in(basis_path);
        if (!in) throw std::runtime_error("cannot open basis file: " + basis_path);
        nlohmann::json j;
        in >> j;
        basis = kw::basis_from_json(j);
    } else {
        if (!level.has_value() || p_text.empty())
            throw std::domain_error("identity " + identity + " needs --basis or both --N and --p");
        basis = kw::kravchuk_matrix(*level, kw::parse_rational(p_text));
    }

    if (identity == "all") {
        for (const char* name : {"orthogonality", "inverse", "involution", "determinant", "appell"})
            verify_univariate_identity(report, name, basis, order);
    } else {
        verify_univariate_identity(report, identity, basis, order);
    }
    return report.exit_code();
}

kw::Polynomial parse_polynomial(const std::string& text) {
    return kw::Polynomial{kw::parse_rational_list(text)};
}

kw::BivariatePolynomial parse_bivariate(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        if (semi == std::string::npos) semi = text.size();
        rows.push_back(kw::parse_rational_list(text.substr(start, semi - start)));
        if (semi == text.size()) break;
        start = semi + 1;
    }
    const std::size_t cols = rows.front().size();
    std::vector<Rational> entries;
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("bivariate coefficients: ragged rows");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return kw::BivariatePolynomial{kw::DenseMatrix(rows.size(), cols, std::move(entries))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Krawtchouk transforms: univariate, coding and multivariate"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a Krawtchouk basis (Phi, B, Gamma)");
    unsigned gen_level = 0;
    std::string gen_p;
    gen->add_option("--N", gen_level, "level")->required();
    gen->add_option("--p", gen_p, "probability as num/den")->required();

    // inverse
    auto* inverse = app.add_subcommand("inverse", "exact inverse of the Kravchuk matrix");
    unsigned inv_level = 0;
    std::string inv_p;
    inverse->add_option("--N", inv_level, "level")->required();
    inverse->add_option("--p", inv_p, "probability as num/den")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check a matrix identity and print PASS/FAIL");
    std::string identity;
    std::optional<unsigned> verify_level;
    std::string verify_p;
    unsigned verify_order = 0;
    std::string basis_path;
    std::string verify_file;
    std::string verify_probs;
    unsigned verify_multi_level = 2;
    std::string verify_example;
    verify->add_option("--identity", identity, "identity to check")
        ->required()
        ->check(CLI::IsMember({"orthogonality", "inverse", "involution", "determinant",
                               "transpose-lemma", "eq3", "appell", "all"}));
    verify->add_option("--N", verify_level, "level");
    verify->add_option("--p", verify_p, "probability as num/den");
    verify->add_option("--order", verify_order, "series truncation order (appell)");
    verify->add_option("--basis", basis_path, "basis JSON produced by gen");
    verify->add_option("--file", verify_file, "base matrix file (transpose-lemma, eq3)");
    verify->add_option("--probs", verify_probs, "comma-separated probabilities (eq3)");
    verify->add_option("--level", verify_multi_level, "induced level (transpose-lemma, eq3)");
    verify->add_option("--example", verify_example,
                       "builtin instance: two-variable or three-variable");

    // transform
    auto* transform = app.add_subcommand("transform", "apply a transform or expansion");
    std::string mode;
    std::optional<unsigned> tr_level, tr_level_y;
    std::string tr_p, tr_p2, tr_s, tr_vec, tr_poly, tr_poly2d, tr_file, tr_probs, tr_example, tr_side;
    bool tr_inverse = false;
    transform->add_option("--mode", mode, "transform mode")
        ->required()
        ->check(CLI::IsMember({"univariate", "coding", "multivariate", "expand", "expand2d"}));
    transform->add_option("--N", tr_level, "level (univariate/coding/expand/expand2d)");
    transform->add_option("--M", tr_level_y, "second level (expand2d)");
    transform->add_option("--p", tr_p, "probability as num/den");
    transform->add_option("--p1", tr_p, "first probability (expand2d)");
    transform->add_option("--p2", tr_p2, "second probability (expand2d)");
    transform->add_option("--s", tr_s, "alphabet size (coding)");
    transform->add_option("--vec", tr_vec, "comma-separated data vector");
    transform->add_option("--poly", tr_poly, "polynomial coefficients, ascending degree");
    transform->add_option("--poly2d", tr_poly2d, "bivariate coefficients, rows split by ';'");
    transform->add_option("--file", tr_file, "base matrix file (multivariate)");
    transform->add_option("--probs", tr_probs, "probabilities (multivariate)");
    transform->add_option("--level", tr_level, "induced level (multivariate)");
    transform->add_option("--example", tr_example, "builtin instance (multivariate)");
    transform->add_option("--side", tr_side, "left (Phi*v) or right (v^T*Phi)")
        ->check(CLI::IsMember({"left", "right"}));
    transform->add_flag("--inverse", tr_inverse, "apply the inverse transform (multivariate)");

    // sympower
    auto* sympower = app.add_subcommand("sympower", "induced (symmetric-power) matrix at a level");
    std::string sp_file;
    unsigned sp_level = 1;
    sympower->add_option("--file", sp_file, "base matrix file")->required();
    sympower->add_option("--level", sp_level, "level")->required();

    // multi
    auto* multi = app.add_subcommand("multi", "build a multivariate Krawtchouk system");
    std::string mu_file, mu_probs, mu_example;
    unsigned mu_level = 2;
    multi->add_option("--file", mu_file, "base matrix file");
    multi->add_option("--probs", mu_probs, "comma-separated probabilities");
    multi->add_option("--level", mu_level, "level")->required();
    multi->add_option("--example", mu_example, "builtin instance");

    // code
    auto* code = app.add_subcommand("code", "weight/distance distributions and transform checks");
    std::string code_op = "weight";
    std::string code_gen, code_words;
    unsigned code_s = 2;
    code->add_option("--op", code_op, "operation")
        ->check(CLI::IsMember({"weight", "distance", "macwilliams", "delsarte"}));
    code->add_option("--gen", code_gen, "generator matrix CSV (linear code)");
    code->add_option("--words", code_words, "explicit word list CSV");
    code->add_option("--s", code_s, "alphabet / field order")->required();

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            const kw::KravchukBasis basis = kw::kravchuk_matrix(gen_level, kw::parse_rational(gen_p));
            if (format == "csv")
                write_output(kw::matrix_to_csv(basis.phi), out_path);
            else
                write_output(render_json(kw::basis_to_json(basis)), out_path);
            return kExitOk;
        }

        if (inverse->parsed()) {
            const kw::KravchukBasis basis = kw::kravchuk_matrix(inv_level, kw::parse_rational(inv_p));
            emit_matrix(kw::inverse_kravchuk(basis), format, out_path);
            return kExitOk;
        }

        if (verify->parsed()) {
            return run_verify(identity, verify_level, verify_p, verify_order, basis_path,
                              verify_file, verify_probs, verify_multi_level, verify_example);
        }

        if (transform->parsed()) {
            if (mode == "univariate") {
                if (!tr_level.has_value()) throw std::domain_error("univariate mode needs --N");
                const kw::KravchukBasis basis =
                    kw::kravchuk_matrix(*tr_level, kw::parse_rational(tr_p));
                const auto side =
                    tr_side == "right" ? kw::TransformSide::Right : kw::TransformSide::Left;
                emit_vector(kw::transform(basis, kw::parse_rational_list(tr_vec), side), format,
                            out_path);
            } else if (mode == "coding") {
                if (!tr_level.has_value()) throw std::domain_error("coding mode needs --N");
                const kw::CodingKrawtchouk ck =
                    kw::coding_matrix(*tr_level, static_cast<unsigned>(std::stoul(tr_s)));
                emit_vector(kw::krawtchouk_transform_vec(ck, kw::parse_rational_list(tr_vec)),
                            format, out_path);
            } else if (mode == "expand") {
                if (!tr_level.has_value()) throw std::domain_error("expand mode needs --N");
                emit_vector(kw::expansion_coefficients(parse_polynomial(tr_poly), *tr_level,
                                                       kw::parse_rational(tr_p)),
                            format, out_path);
            } else if (mode == "expand2d") {
                if (!tr_level.has_value() || !tr_level_y.has_value())
                    throw std::domain_error("expand2d mode needs --N and --M");
                emit_matrix(kw::expansion_coefficients_2d(parse_bivariate(tr_poly2d), *tr_level,
                                                          *tr_level_y, kw::parse_rational(tr_p),
                                                          kw::parse_rational(tr_p2)),
                            format, out_path);
            } else {  // multivariate
                kw::DenseMatrix a;
                std::vector<Rational> probs;
                if (!tr_example.empty()) {
                    BuiltinInstance instance = builtin_instance(tr_example);
                    a = std::move(instance.base);
                    probs = std::move(instance.probabilities);
                } else {
                    if (tr_file.empty() || tr_probs.empty())
                        throw std::domain_error(
                            "multivariate mode needs --example or both --file and --probs");
                    a = load_matrix_arg(tr_file);
                    probs = kw::parse_rational_list(tr_probs);
                }
                if (!tr_level.has_value()) throw std::domain_error("multivariate mode needs --level");
                const kw::MultivariateKravchuk mk = kw::build_multivariate(a, probs, *tr_level);
                const std::vector<Rational> data = kw::parse_rational_list(tr_vec);
                if (tr_inverse) {
                    emit_vector(kw::multivariate_inverse(mk).apply(data), format, out_path);
                } else {
                    emit_vector(kw::multivariate_transform(mk, data), format, out_path);
                }
            }
            return kExitOk;
        }

        if (sympower->parsed()) {
            const kw::InducedMatrix induced = kw::induced_matrix(load_matrix_arg(sp_file), sp_level);
            emit_matrix(induced.matrix, format, out_path);
            return kExitOk;
        }

        if (multi->parsed()) {
            kw::DenseMatrix a;
            std::vector<Rational> probs;
            if (!mu_example.empty()) {
                BuiltinInstance instance = builtin_instance(mu_example);
                a = std::move(instance.base);
                probs = std::move(instance.probabilities);
            } else {
                if (mu_file.empty() || mu_probs.empty())
                    throw std::domain_error("multi needs --example or both --file and --probs");
                a = load_matrix_arg(mu_file);
                probs = kw::parse_rational_list(mu_probs);
            }
            const kw::MultivariateKravchuk mk = kw::build_multivariate(a, probs, mu_level);
            Rational weight_sum = 0;
            for (std::size_t i = 0; i < mk.size(); ++i) weight_sum += mk.weight_diagonal(i, i);
            const std::size_t defect = kw::multivariate_orthogonality_defect(mk).nonzero_count();
            nlohmann::json report{
                {"orthogonality_defect_nonzeros", defect},
                {"weight_sum", kw::to_string(weight_sum)},
                {"norm_base", kw::vector_to_json(mk.norm_base)},
            };
            nlohmann::json output{{"level", mk.level},
                                  {"Phi", kw::matrix_to_json(mk.phi)},
                                  {"BPbar", kw::matrix_to_json(mk.weight_diagonal)},
                                  {"BDbar", kw::matrix_to_json(mk.norm_diagonal)},
                                  {"report", std::move(report)}};
            write_output(render_json(output), out_path);
            return defect == 0 ? kExitOk : kExitCheckFailed;
        }

        if (code->parsed()) {
            if (code_op == "weight") {
                if (code_gen.empty()) throw std::domain_error("weight op needs --gen");
                const kw::DenseMatrix g = load_matrix_arg(code_gen);
                kw::LinearCode lc(code_s, static_cast<unsigned>(g.cols()),
                                  integer_rows(g, code_s));
                emit_vector(kw::weight_distribution(lc), format, out_path);
                return kExitOk;
            }
            if (code_op == "macwilliams") {
                if (code_gen.empty()) throw std::domain_error("macwilliams op needs --gen");
                const kw::DenseMatrix g = load_matrix_arg(code_gen);
                kw::LinearCode lc(code_s, static_cast<unsigned>(g.cols()),
                                  integer_rows(g, code_s));
                const bool ok = kw::macwilliams_check(lc);
                std::cout << (ok ? "PASS" : "FAIL") << " macwilliams n=" << lc.length()
                          << " k=" << lc.rank() << " s=" << code_s << '\n';
                return ok ? kExitOk : kExitCheckFailed;
            }
            // distance / delsarte accept --words, or --gen for a linear code's words
            std::vector<kw::Word> words;
            if (!code_words.empty()) {
                words = words_from_matrix(load_matrix_arg(code_words), code_s);
            } else if (!code_gen.empty()) {
                const kw::DenseMatrix g = load_matrix_arg(code_gen);
                kw::LinearCode lc(code_s, static_cast<unsigned>(g.cols()),
                                  integer_rows(g, code_s));
                words = lc.codewords();
            } else {
                throw std::domain_error(code_op + " op needs --words or --gen");
            }
            if (code_op == "distance") {
                emit_vector(kw::distance_enumerator(words), format, out_path);
                return kExitOk;
            }
            const bool ok = kw::delsarte_check(words, code_s);
            std::cout << (ok ? "PASS" : "FAIL") << " delsarte words=" << words.size()
                      << " s=" << code_s << '\n';
            return ok ? kExitOk : kExitCheckFailed;
        }

        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
