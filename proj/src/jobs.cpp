#include "swanlab/jobs.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "swanlab/errors.hpp"
#include "swanlab/parser.hpp"
#include "swanlab/render.hpp"
#include "swanlab/selftest.hpp"

namespace swanlab {

namespace {

OrderedJson result_header(const std::string& command, const FieldConfig& F,
                          const std::vector<std::string>& rendered_input) {
    OrderedJson out;
    out["schema"] = kSchemaTag;
    out["command"] = command;
    out["field"] = field_to_json(F);
    out["witt_length"] = rendered_input.size();
    out["input"] = rendered_input;
    out["status"] = "ok";  // reassigned in place once the outcome is known
    return out;
}

const char* basis_name(Basis b) { return b == Basis::Log ? "log" : "plain"; }

}  // namespace

FieldConfig field_from_json(const OrderedJson& j) {
    if (!j.is_object()) throw ConfigError("field config must be an object");
    if (!j.contains("p")) throw ConfigError("field config needs a prime p");
    const long long praw = j.at("p").get<long long>();
    if (praw < 2) throw ConfigError("p must be a prime >= 2");
    const Coeff p = static_cast<Coeff>(praw);
    if (!witt_prime_supported(p))
        throw ConfigError("supported residue characteristics: 2, 3, 5");

    GaloisField gf = [&]() -> GaloisField {
        if (j.contains("modulus")) {
            ModulusPoly mod;
            for (const auto& v : j.at("modulus")) {
                const long long c = v.get<long long>();
                if (c < 0 || c >= praw)
                    throw ConfigError("modulus coefficients must lie in [0, p)");
                mod.push_back(static_cast<Coeff>(c));
            }
            return GaloisField(p, std::move(mod));
        }
        unsigned e = j.contains("e") ? j.at("e").get<unsigned>() : 0;
        if (j.contains("q")) {
            const unsigned long long q = j.at("q").get<unsigned long long>();
            unsigned long long t = 1;
            unsigned eq = 0;
            while (t < q) {
                t *= p;
                ++eq;
            }
            if (t != q || eq == 0)
                throw ConfigError("q must be a positive power of p");
            if (e != 0 && e != eq) throw ConfigError("e and q disagree");
            e = eq;
        }
        if (e == 0) e = 1;
        return GaloisField(p, e);
    }();

    ResidueKind kind = ResidueKind::Perfect;
    if (j.contains("residue")) {
        const std::string r = j.at("residue").get<std::string>();
        if (r == "perfect")
            kind = ResidueKind::Perfect;
        else if (r == "rational" || r == "rational(y)")
            kind = ResidueKind::RationalFunction;
        else
            throw ConfigError("unknown residue kind: " + r);
    }
    return FieldConfig(std::move(gf), kind);
}

OrderedJson field_to_json(const FieldConfig& F) {
    OrderedJson out;
    out["p"] = F.gf.p();
    out["e"] = F.gf.e();
    out["q"] = F.gf.q();
    out["residue"] = F.has_y() ? "rational" : "perfect";
    out["modulus"] = F.gf.modulus();
    return out;
}

JobSpec job_from_json(const OrderedJson& j) {
    // field keys may sit inline or under a nested "field" object
    const OrderedJson& f =
        j.is_object() && j.contains("field") ? j.at("field") : j;
    JobSpec job{field_from_json(f), {}, {}};
    if (!j.contains("witt") || !j.at("witt").is_array() ||
        j.at("witt").empty())
        throw ConfigError("job needs a nonempty \"witt\" array of expressions");
    for (const auto& s : j.at("witt"))
        job.witt.push_back(s.get<std::string>());
    if (j.contains("budget"))
        job.opts.search_budget = j.at("budget").get<unsigned long>();
    if (j.contains("depth"))
        job.opts.search_depth = j.at("depth").get<unsigned>();
    if (j.contains("phase1_cap"))
        job.opts.phase1_cap = j.at("phase1_cap").get<unsigned long>();
    return job;
}

WittVec parse_witt_input(const FieldConfig& F,
                         const std::vector<std::string>& comps) {
    if (comps.empty()) throw ConfigError("empty Witt vector");
    if (comps.size() > kMaxWittLength)
        throw ConfigError("Witt length beyond supported envelope (" +
                          std::to_string(kMaxWittLength) + ")");
    WittVec x;
    x.reserve(comps.size());
    for (const auto& s : comps) x.push_back(parse_element(s, F));
    return x;
}

OrderedJson graded_to_json(const FieldConfig& F, const GradedForm& g) {
    OrderedJson out;
    out["alpha"] = render_res(F, g.alpha);
    out["beta"] = render_res(F, g.beta);
    out["n"] = g.n;
    out["basis"] = basis_name(g.basis);
    out["rendering"] = render_graded(F, g);
    return out;
}

OrderedJson normal_form_to_json(const FieldConfig& F,
                                const GradedNormalForm& nf) {
    OrderedJson out;
    out["basis"] = basis_name(nf.basis);
    out["n"] = nf.n;
    if (nf.basis == Basis::Log) out["n0"] = nf.n0;
    out["r"] = nf.r;
    if (nf.basis == Basis::Plain) out["rp"] = nf.rp;
    OrderedJson layers = OrderedJson::array();
    for (const auto& row : nf.layers) {
        OrderedJson jr = OrderedJson::array();
        for (const auto& c : row) jr.push_back(render_res(F, c));
        layers.push_back(std::move(jr));
    }
    out["layers"] = std::move(layers);
    out["x"] = render_res(F, nf.x);
    return out;
}

OrderedJson conductor_result(const JobSpec& job) {
    const FieldConfig& F = job.field;
    WittVec x = parse_witt_input(F, job.witt);
    OrderedJson out = result_header("conductor", F, render_witt(F, x));
    ConductorReport rep = conductor_report(F, x, job.opts);

    std::string status = "ok";
    if (rep.budget_hit || !rep.sw_exact || !rep.sw_mod_exact)
        status = "budget_exceeded";
    else if (rep.rsw_mod_unsupported)
        status = "unsupported_range";
    else if (!rep.slope || !rep.log_slope)
        status = "out_of_theorem_range";
    out["status"] = status;

    out["sw"] = rep.sw;
    out["sw_exact"] = rep.sw_exact;
    if (rep.rsw) out["rsw"] = graded_to_json(F, *rep.rsw);
    out["sw_mod"] = rep.sw_mod;
    out["sw_mod_exact"] = rep.sw_mod_exact;
    if (rep.rsw_mod) out["rsw_mod"] = graded_to_json(F, *rep.rsw_mod);
    if (rep.rsw_mod_unsupported) out["rsw_mod_unsupported"] = true;
    if (rep.log_slope) out["log_slope"] = *rep.log_slope;
    if (rep.slope) out["slope"] = *rep.slope;
    if (rep.log_char_point)
        out["log_char_point"] = graded_to_json(F, *rep.log_char_point);
    if (rep.char_point) out["char_point"] = graded_to_json(F, *rep.char_point);
    out["reduced"] = render_witt(F, rep.reduced);
    out["steps"] = rep.steps;
    return out;
}

OrderedJson reduce_result(const JobSpec& job) {
    const FieldConfig& F = job.field;
    WittVec x = parse_witt_input(F, job.witt);
    OrderedJson out = result_header("reduce", F, render_witt(F, x));
    ReduceOutcome rc = reduce_representative(F, x, job.opts);
    out["status"] = rc.exact ? "ok" : "budget_exceeded";
    out["reduced"] = render_witt(F, rc.rep);
    out["level"] = rc.level;
    out["exact"] = rc.exact;
    out["steps"] = rc.steps;
    return out;
}

OrderedJson filtration_result(const JobSpec& job, long n_lo, long n_hi) {
    if (n_lo > n_hi) throw ConfigError("empty n-range");
    if (n_hi - n_lo > 10000) throw ConfigError("n-range too large");
    const FieldConfig& F = job.field;
    WittVec x = parse_witt_input(F, job.witt);
    OrderedJson out = result_header("filtration", F, render_witt(F, x));
    out["n_range"] = OrderedJson::array({n_lo, n_hi});
    OrderedJson fil = OrderedJson::array();
    OrderedJson fil_mod = OrderedJson::array();
    for (long n = n_lo; n <= n_hi; ++n) {
        fil.push_back(fil_membership(F.p(), x, n));
        fil_mod.push_back(fil_prime_membership(F.p(), x, n));
    }
    out["fil"] = std::move(fil);
    out["fil_mod"] = std::move(fil_mod);
    out["level"] = witt_level(F.p(), x);
    return out;
}

OrderedJson normalform_result(const FieldConfig& F, Basis basis, long n,
                              const std::string& alpha,
                              const std::string& beta) {
    ResidueElem a = parse_residue_element(alpha, F);
    ResidueElem b = parse_residue_element(beta, F);
    GradedForm g{basis, n, a, b};

    OrderedJson out;
    out["schema"] = kSchemaTag;
    out["command"] = "normalform";
    out["field"] = field_to_json(F);
    OrderedJson in;
    in["basis"] = basis_name(basis);
    in["n"] = n;
    in["alpha"] = render_res(F, a);
    in["beta"] = render_res(F, b);
    out["input"] = std::move(in);
    out["status"] = "ok";
    out["rendering"] = render_graded(F, g);
    try {
        GradedNormalForm nf = graded_normal_form(F, g);
        out["in_image"] = true;
        out["normal_form"] = normal_form_to_json(F, nf);
    } catch (const NotInImageError& e) {
        out["in_image"] = false;
        out["obstruction"] = e.what();
    }
    return out;
}

OrderedJson witt_op_result(const JobSpec& job, const std::string& op,
                           const std::vector<std::string>& other) {
    const FieldConfig& F = job.field;
    WittVec x = parse_witt_input(F, job.witt);
    OrderedJson out = result_header("witt", F, render_witt(F, x));
    out["op"] = op;
    WittVec r;
    if (op == "add") {
        if (other.size() != job.witt.size())
            throw ConfigError("operands of add must have equal length");
        WittVec y = parse_witt_input(F, other);
        out["other"] = render_witt(F, y);
        r = witt_add(F, x, y);
    } else if (op == "neg") {
        r = witt_neg(F, x);
    } else if (op == "frobenius") {
        r = witt_frobenius(F, x);
    } else if (op == "v") {
        if (x.size() + 1 > kMaxWittLength)
            throw ConfigError("V would exceed the supported Witt length");
        r = verschiebung(x);
    } else {
        throw ConfigError("unknown witt op: " + op);
    }
    out["result"] = render_witt(F, r);
    return out;
}

OrderedJson selftest_result(const std::vector<std::string>& suites) {
    OrderedJson out;
    out["schema"] = kSchemaTag;
    out["command"] = "selftest";
    std::vector<SuiteResult> rs = run_selftests(suites);
    bool all = true;
    OrderedJson arr = OrderedJson::array();
    for (const auto& r : rs) {
        OrderedJson jr;
        jr["name"] = r.name;
        jr["passed"] = r.passed;
        jr["checks"] = r.checks;
        if (!r.passed) jr["detail"] = r.detail;
        arr.push_back(std::move(jr));
        all = all && r.passed;
    }
    out["suites"] = std::move(arr);
    out["passed"] = all;
    out["status"] = all ? "ok" : "failed";
    return out;
}

OrderedJson conductor_batch(const OrderedJson& doc) {
    const OrderedJson* arr = nullptr;
    if (doc.is_array())
        arr = &doc;
    else if (doc.is_object() && doc.contains("jobs"))
        arr = &doc.at("jobs");
    if (!arr || !arr->is_array())
        throw ConfigError(
            "batch document must be an array or {\"jobs\": [...]}");

    const std::size_t njobs = arr->size();
    std::vector<OrderedJson> results(njobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= njobs) return;
            try {
                results[i] = conductor_result(job_from_json((*arr)[i]));
            } catch (const ParseError& e) {
                results[i] = error_json(e.what(),
                                        static_cast<long>(e.position));
            } catch (const std::exception& e) {
                results[i] = error_json(e.what());
            }
        }
    };
    unsigned nthreads = std::thread::hardware_concurrency();
    nthreads = std::min<unsigned>(std::max(nthreads, 1u),
                                  static_cast<unsigned>(njobs));
    nthreads = std::min(nthreads, 8u);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    OrderedJson out;
    out["schema"] = kSchemaTag;
    out["command"] = "conductor";
    out["jobs"] = results;
    return out;
}

OrderedJson error_json(const std::string& message, long position) {
    OrderedJson out;
    out["schema"] = kSchemaTag;
    out["status"] = "error";
    out["error"] = message;
    if (position >= 0) out["position"] = position;
    return out;
}

int exit_code_for(const OrderedJson& result) {
    if (result.contains("jobs") && result.at("jobs").is_array()) {
        // a malformed job dominates; otherwise the highest code wins
        int worst = 0;
        for (const auto& jr : result.at("jobs")) {
            int code = exit_code_for(jr);
            if (code == 1) return 1;
            worst = std::max(worst, code);
        }
        return worst;
    }
    if (result.contains("error")) return 1;
    const std::string s = result.value("status", "ok");
    if (s == "budget_exceeded") return 3;
    if (s == "unsupported_range" || s == "out_of_theorem_range") return 2;
    if (s == "failed") return 1;
    return 0;
}

}  // namespace swanlab
