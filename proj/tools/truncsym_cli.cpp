#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "truncsym/field.hpp"
#include "truncsym/ideal.hpp"
#include "truncsym/io.hpp"
#include "truncsym/linalg.hpp"
#include "truncsym/msym.hpp"
#include "truncsym/partition.hpp"

namespace {

using namespace truncsym;

struct CommonArgs {
    unsigned long long p = 0;
    std::size_t n = 1;
    unsigned d = 0;
    std::string format = "text";
    std::optional<unsigned long long> degree_bound;
    std::string dump_dir;
    unsigned long long seed = 0;  // reserved for randomized modes
};

void add_format_flag(CLI::App* cmd, CommonArgs& args)
{
    cmd->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
}

void write_matrix_dumps(const std::string& dir,
                        const std::vector<std::pair<std::string, std::string>>& dumps)
{
    if (dir.empty())
        return;
    std::filesystem::create_directories(dir);
    for (const auto& [tag, csv] : dumps) {
        std::ofstream out(std::filesystem::path(dir) / (tag + ".csv"));
        out << csv;
    }
}

int emit_report(const VerificationReport& rep, const std::string& format)
{
    if (format == "json")
        std::cout << report_to_json(rep).dump() << "\n";
    else
        std::cout << report_to_text(rep);
    return rep.overall() ? 0 : 1;
}

template <class F>
int run_binary_op(const std::string& op, const CommonArgs& args, const std::string& lhs,
                  const std::string& rhs, const F& field)
{
    const MSymPoly<F> a = parse_poly(lhs, args.n, field);
    MSymPoly<F> result(args.n, field);
    if (op == "mul") {
        result = a * parse_poly(rhs, args.n, field);
    }
    else {
        if (rhs.empty() || rhs.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("pow: bad exponent '" + rhs + "'");
        unsigned long long k = 0;
        try {
            k = std::stoull(rhs);
        }
        catch (const std::exception&) {
            throw std::invalid_argument("pow: bad exponent '" + rhs + "'");
        }
        result = pow(a, k);
    }
    if (args.format == "json")
        std::cout << msym_to_json(result).dump() << "\n";
    else
        std::cout << render_poly(result) << "\n";
    return 0;
}

template <class F>
int run_expand(const CommonArgs& args, const std::string& input, const F& field)
{
    const auto expansion = expand_to_monomials(parse_poly(input, args.n, field));
    if (args.format == "json") {
        json j;
        j["n"] = args.n;
        j["p"] = field.characteristic();
        json monomials = json::array();
        for (const auto& [alpha, c] : expansion) {
            json exps = json::array();
            for (unsigned e : alpha)
                exps.push_back(e);
            monomials.push_back(json{{"exponents", exps}, {"coeff", c.str()}});
        }
        j["monomials"] = monomials;
        std::cout << j.dump() << "\n";
    }
    else {
        for (const auto& [alpha, c] : expansion) {
            std::string line;
            for (std::size_t i = 0; i < alpha.size(); ++i)
                line += (i ? "," : "") + std::to_string(alpha[i]);
            std::cout << line << ": " << c.str() << "\n";
        }
    }
    return 0;
}

int run_sweep(const std::vector<unsigned long long>& p_list, std::size_t n_max, unsigned d_max,
              const std::string& format)
{
    std::vector<unsigned long long> primes = p_list;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (unsigned long long p : primes) {
        if (!is_prime(p))
            throw std::invalid_argument("sweep: " + std::to_string(p) + " is not prime");
    }

    std::vector<VerificationReport> cells;
    for (unsigned long long p : primes) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            for (unsigned d = 1; d <= d_max; ++d)
                cells.push_back(verify_conjecture(p, n, d));
        }
    }
    std::size_t passed = 0;
    for (const auto& rep : cells)
        passed += rep.overall() ? 1 : 0;

    if (format == "json") {
        json j;
        json arr = json::array();
        for (const auto& rep : cells)
            arr.push_back(report_to_json(rep));
        j["cells"] = arr;
        j["summary"] = json{{"cells", cells.size()}, {"passed", passed}};
        j["overall"] = passed == cells.size() ? "pass" : "fail";
        std::cout << j.dump() << "\n";
    }
    else {
        for (const auto& rep : cells)
            std::cout << report_to_text(rep);
        std::cout << "summary:\n";
        for (const auto& rep : cells) {
            std::cout << "p=" << rep.p << " n=" << rep.n << " d=" << rep.d << ": "
                      << (rep.overall() ? "pass" : "fail") << "\n";
        }
        std::cout << passed << "/" << cells.size() << " cells pass\n";
    }
    return passed == cells.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact symmetric-polynomial arithmetic in the monomial basis and "
                 "generator verification for truncation ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonArgs args;
    std::vector<std::string> inputs;
    std::vector<unsigned long long> p_list;
    std::size_t n_max = 4;
    unsigned d_max = 2;
    app.add_option("--seed", args.seed, "Seed for randomized modes (reserved)");

    auto add_pn = [&](CLI::App* cmd) {
        cmd->add_option("--p", args.p, "Field characteristic (0 = rationals)")->required();
        cmd->add_option("--n", args.n, "Number of variables")
            ->required()
            ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    };

    CLI::App* mul = app.add_subcommand("mul", "Multiply two polynomials");
    add_pn(mul);
    add_format_flag(mul, args);
    mul->add_option("inputs", inputs, "Two polynomial literals")->expected(2);

    CLI::App* pw = app.add_subcommand("pow", "Raise a polynomial to a power");
    add_pn(pw);
    add_format_flag(pw, args);
    pw->add_option("inputs", inputs, "Polynomial literal and exponent")->expected(2);

    CLI::App* expand = app.add_subcommand("expand", "Expand a polynomial into monomials");
    add_pn(expand);
    add_format_flag(expand, args);
    expand->add_option("inputs", inputs, "Polynomial literal")->expected(1);

    CLI::App* gens = app.add_subcommand("generators", "List the generating set of the truncation ideal");
    add_pn(gens);
    gens->add_option("--d", args.d, "Truncation degree")->required();
    add_format_flag(gens, args);

    CLI::App* conj = app.add_subcommand("conjecture", "List generators with conjecturally redundant ones flagged");
    add_pn(conj);
    conj->add_option("--d", args.d, "Truncation degree")->required();
    add_format_flag(conj, args);

    CLI::App* member = app.add_subcommand("member", "Test membership in the truncation ideal");
    add_pn(member);
    member->add_option("--d", args.d, "Truncation degree")->required();
    add_format_flag(member, args);
    member->add_option("inputs", inputs, "Polynomial literal")->expected(1);

    CLI::App* vt = app.add_subcommand("verify-theorem", "Verify the generating set degree by degree");
    add_pn(vt);
    vt->add_option("--d", args.d, "Truncation degree")->required();
    vt->add_option("--degree-bound", args.degree_bound, "Highest degree to check");
    vt->add_option("--dump-matrices", args.dump_dir, "Write span matrices as CSV into this directory");
    add_format_flag(vt, args);

    CLI::App* vc = app.add_subcommand("verify-conjecture", "Verify redundancy and minimality of the conjectured set");
    add_pn(vc);
    vc->add_option("--d", args.d, "Truncation degree")->required();
    vc->add_option("--dump-matrices", args.dump_dir, "Write span matrices as CSV into this directory");
    add_format_flag(vc, args);

    CLI::App* sweep = app.add_subcommand("sweep", "Run verify-conjecture over a parameter grid");
    sweep->add_option("--p", p_list, "Prime characteristics to sweep (repeatable)");
    sweep->add_option("--n-max", n_max, "Largest variable count");
    sweep->add_option("--d-max", d_max, "Largest truncation degree");
    add_format_flag(sweep, args);

    try {
        app.parse(argc, argv);

        const FieldSpec spec = app.got_subcommand(sweep) ? FieldSpec(0) : FieldSpec(args.p);

        if (app.got_subcommand(mul) || app.got_subcommand(pw)) {
            const std::string op = app.got_subcommand(mul) ? "mul" : "pow";
            return with_field(spec, [&](const auto& field) {
                return run_binary_op(op, args, inputs[0], inputs[1], field);
            });
        }
        if (app.got_subcommand(expand)) {
            return with_field(spec,
                              [&](const auto& field) { return run_expand(args, inputs[0], field); });
        }
        if (app.got_subcommand(gens) || app.got_subcommand(conj)) {
            const GeneratorSpec gs = app.got_subcommand(gens)
                                         ? theorem_generators(args.p, args.n, args.d)
                                         : conjecture_generators(args.p, args.n, args.d);
            if (args.format == "json")
                std::cout << generator_spec_to_json(gs).dump() << "\n";
            else
                std::cout << generator_spec_to_text(gs);
            return 0;
        }
        if (app.got_subcommand(member)) {
            return with_field(spec, [&](const auto& field) {
                const bool ok = is_truncation_member(parse_poly(inputs[0], args.n, field), args.d);
                if (args.format == "json")
                    std::cout << json{{"member", ok}}.dump() << "\n";
                else
                    std::cout << (ok ? "true" : "false") << "\n";
                return ok ? 0 : 1;
            });
        }
        if (app.got_subcommand(vt)) {
            std::vector<std::pair<std::string, std::string>> dumps;
            VerifyOptions opt;
            opt.degree_bound = args.degree_bound;
            if (!args.dump_dir.empty())
                opt.matrix_dump = &dumps;
            const VerificationReport rep = verify_theorem(args.p, args.n, args.d, opt);
            write_matrix_dumps(args.dump_dir, dumps);
            return emit_report(rep, args.format);
        }
        if (app.got_subcommand(vc)) {
            std::vector<std::pair<std::string, std::string>> dumps;
            VerifyOptions opt;
            if (!args.dump_dir.empty())
                opt.matrix_dump = &dumps;
            const VerificationReport rep = verify_conjecture(args.p, args.n, args.d, opt);
            write_matrix_dumps(args.dump_dir, dumps);
            return emit_report(rep, args.format);
        }
        if (app.got_subcommand(sweep))
            return run_sweep(p_list, n_max, d_max, args.format);

        std::cerr << "error: no subcommand\n";
        return 2;
    }
    catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
