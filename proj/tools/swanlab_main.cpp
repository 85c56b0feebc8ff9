// swanlab: exact Swan conductors, refined conductors and slopes for
// Artin-Schreier-Witt characters of F((pi)), with JSON output.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "swanlab/errors.hpp"
#include "swanlab/jobs.hpp"

namespace {

using swanlab::OrderedJson;

struct FieldFlags {
    unsigned long p = 0;
    unsigned long e = 0;
    unsigned long long q = 0;
    std::vector<unsigned long> modulus;
    std::string residue = "perfect";
};

void add_field_flags(CLI::App* cmd, FieldFlags& f, bool require_p = true) {
    cmd->add_option("-p", f.p, "residue characteristic (2, 3 or 5)")
        ->required(require_p);
    cmd->add_option("-e", f.e, "extension degree of GF(q) over GF(p)");
    cmd->add_option("-q", f.q, "residue cardinality p^e");
    cmd->add_option("--modulus", f.modulus,
                    "modulus coefficients over GF(p), lowest degree first");
    cmd->add_option("--residue", f.residue,
                    "residue field kind: perfect | rational(y)");
}

swanlab::FieldConfig field_from_flags(const FieldFlags& f) {
    OrderedJson j;
    if (f.p) j["p"] = f.p;
    if (f.e) j["e"] = f.e;
    if (f.q) j["q"] = f.q;
    if (!f.modulus.empty()) j["modulus"] = f.modulus;
    j["residue"] = f.residue;
    return swanlab::field_from_json(j);
}

std::vector<std::string> components_from_flag(const std::string& s) {
    OrderedJson j = OrderedJson::parse(s);
    if (!j.is_array())
        throw swanlab::ConfigError(
            "--witt expects a JSON array of component expressions");
    std::vector<std::string> out;
    for (const auto& c : j) out.push_back(c.get<std::string>());
    return out;
}

void parse_range(const std::string& s, long& lo, long& hi) {
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw swanlab::ConfigError("--n-range expects the form a..b");
    try {
        lo = std::stol(s.substr(0, dots));
        hi = std::stol(s.substr(dots + 2));
    } catch (const std::exception&) {
        throw swanlab::ConfigError("--n-range expects integers a..b");
    }
}

int emit(const OrderedJson& result) {
    std::cout << result.dump(2) << "\n";
    return swanlab::exit_code_for(result);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "swanlab: Swan conductors of Artin-Schreier-Witt characters over "
        "F((pi)), exactly"};
    app.set_version_flag("--version", std::string("swanlab 0.1.0, schema ") +
                                          swanlab::kSchemaTag);
    app.require_subcommand(1);

    FieldFlags field;
    std::string witt_flag;
    std::string other_flag;
    std::string jobs_file;
    std::string n_range = "0..0";
    std::string basis_flag = "log";
    std::string alpha_flag = "0";
    std::string beta_flag = "0";
    std::string op_flag;
    long level = 0;
    swanlab::ReduceOptions opts;
    std::vector<std::string> suites;

    CLI::App* conductor = app.add_subcommand(
        "conductor", "sw, sw', rsw, rsw', slopes and characteristic points");
    add_field_flags(conductor, field, /*require_p=*/false);
    conductor->add_option("--witt", witt_flag,
                          "character as a JSON array of component expressions");
    conductor->add_option("--jobs", jobs_file,
                          "batch file (JSON array of jobs, run in parallel)");
    conductor->add_option("--budget", opts.search_budget,
                          "reduction search budget");
    conductor->add_option("--depth", opts.search_depth,
                          "reduction search depth");
    conductor->add_option("--phase1-cap", opts.phase1_cap,
                          "cap on phase-1 rewrite steps (0 = automatic)");

    CLI::App* reduce = app.add_subcommand(
        "reduce", "minimal-filtration representative of a character");
    add_field_flags(reduce, field);
    reduce->add_option("--witt", witt_flag, "character components")->required();
    reduce->add_option("--budget", opts.search_budget,
                       "reduction search budget");
    reduce->add_option("--depth", opts.search_depth, "reduction search depth");
    reduce->add_option("--phase1-cap", opts.phase1_cap,
                       "cap on phase-1 rewrite steps (0 = automatic)");

    CLI::App* filtration = app.add_subcommand(
        "filtration", "fil and fil' membership over a range of levels");
    add_field_flags(filtration, field);
    filtration->add_option("--witt", witt_flag, "character components")
        ->required();
    filtration->add_option("--n-range", n_range, "level range a..b")
        ->required();

    CLI::App* normalform = app.add_subcommand(
        "normalform", "normal-form decomposition of a graded class");
    add_field_flags(normalform, field);
    normalform->add_option("--basis", basis_flag, "log | plain");
    normalform->add_option("-n", level, "level of the class")->required();
    normalform->add_option("--alpha", alpha_flag, "dy coefficient");
    normalform->add_option("--beta", beta_flag,
                           "dlog(pi) (log) or dpi (plain) coefficient");

    CLI::App* witt = app.add_subcommand("witt", "Witt vector arithmetic");
    add_field_flags(witt, field);
    witt->add_option("--op", op_flag, "add | neg | frobenius | v")->required();
    witt->add_option("--witt", witt_flag, "first operand")->required();
    witt->add_option("--other", other_flag, "second operand (for add)");

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the property suites");
    selftest->add_option("--suite", suites,
                         "suite names to run (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cout << swanlab::error_json(e.what()).dump(2) << "\n";
        return 1;
    }

    try {
        if (*conductor) {
            if (!jobs_file.empty()) {
                std::ifstream in(jobs_file);
                if (!in)
                    throw swanlab::ConfigError("cannot open jobs file: " +
                                               jobs_file);
                return emit(swanlab::conductor_batch(OrderedJson::parse(in)));
            }
            if (witt_flag.empty())
                throw swanlab::ConfigError(
                    "conductor needs --witt or --jobs");
            swanlab::JobSpec job{field_from_flags(field),
                                 components_from_flag(witt_flag), opts};
            return emit(swanlab::conductor_result(job));
        }
        if (*reduce) {
            swanlab::JobSpec job{field_from_flags(field),
                                 components_from_flag(witt_flag), opts};
            return emit(swanlab::reduce_result(job));
        }
        if (*filtration) {
            long lo = 0, hi = 0;
            parse_range(n_range, lo, hi);
            swanlab::JobSpec job{field_from_flags(field),
                                 components_from_flag(witt_flag), opts};
            return emit(swanlab::filtration_result(job, lo, hi));
        }
        if (*normalform) {
            swanlab::Basis basis;
            if (basis_flag == "log")
                basis = swanlab::Basis::Log;
            else if (basis_flag == "plain")
                basis = swanlab::Basis::Plain;
            else
                throw swanlab::ConfigError("--basis must be log or plain");
            return emit(swanlab::normalform_result(field_from_flags(field),
                                                   basis, level, alpha_flag,
                                                   beta_flag));
        }
        if (*witt) {
            swanlab::JobSpec job{field_from_flags(field),
                                 components_from_flag(witt_flag), opts};
            std::vector<std::string> other;
            if (!other_flag.empty()) other = components_from_flag(other_flag);
            return emit(swanlab::witt_op_result(job, op_flag, other));
        }
        if (*selftest) {
            OrderedJson result = swanlab::selftest_result(suites);
            for (const auto& s : result.at("suites"))
                std::cerr << (s.at("passed").get<bool>() ? "PASS " : "FAIL ")
                          << s.at("name").get<std::string>() << " ("
                          << s.at("checks").get<unsigned long>() << " checks)"
                          << "\n";
            return emit(result);
        }
    } catch (const swanlab::ParseError& e) {
        std::cout << swanlab::error_json(e.what(),
                                         static_cast<long>(e.position))
                         .dump(2)
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << swanlab::error_json(e.what()).dump(2) << "\n";
        return 1;
    }
    return 1;
}
