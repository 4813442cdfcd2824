/*
   Copyright 2026 The dtlsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dtlsum/verify.hpp"

namespace dtlsum::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int L = 0;
    std::vector<std::string> vars;
    std::string model, method;
    std::vector<std::string> ids;
    std::string suite;
    int min_L = 0, max_L = 0;
    std::string mode = "symbolic";
    int trials = 200;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string format = "text";
    std::string out;
    bool timing = false;
    int max_symbolic_L = 0;
    bool corrupt = false;
    bool raw = false;
    std::string family, matrix;
    int index = 0;
    std::string dir;
    bool check = false;

    // which optional flags were given
    bool has_L = false, has_vars = false, has_min = false, has_max = false, has_seed = false, has_jobs = false,
         has_ceiling = false, has_index = false;
};

std::string join(const std::vector<std::string>& v, std::string_view sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i];
    }
    return s;
}

std::vector<std::string> names_of(const VarSetPtr& vs) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < vs->size(); ++i) v.push_back(vs->name(i));
    return v;
}

std::string kebab(std::string_view upper) {
    std::string s(upper);
    for (auto& c : s) c = c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string upper_snake(std::string_view k) {
    std::string s(k);
    for (auto& c : s) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

VarSetPtr vars_of(const RunConfig& c) {
    if (c.has_L == c.has_vars) throw UsageError("give exactly one of --L and --vars");
    if (c.has_vars) return VarSet::make(c.vars);
    if (c.L < 0) throw UsageError("--L must be >= 0");
    return VarSet::numbered(c.L);
}

// ---- compute ----------------------------------------------------------------

std::string cmd_compute(const RunConfig& c) {
    auto model = parse_model(c.model);
    if (!model) throw UsageError("--model must be periodic or open");
    auto method = parse_method(c.method);
    if (!method) throw UsageError("unknown --method '" + c.method + "'");
    SumRuleResult r;
    if (*method == Method::ORACLE_INTERP) {
        if (!c.has_L || c.has_vars) throw UsageError("the oracle takes --L only");
        r = oracle_interpolate(*model, c.L, !c.raw);
    } else {
        if (model_of(*method) != *model)
            throw UsageError(c.method + " is not a " + std::string(to_string(*model)) + " method");
        auto vs = vars_of(c);
        r = *model == Model::PERIODIC ? zp_compute(vs, *method, !c.raw) : z_open_compute(vs, *method, !c.raw);
    }
    if (c.format == "json") {
        json j;
        j["command"] = "compute";
        j["model"] = to_string(*model);
        j["method"] = to_string(r.method);
        j["vars"] = names_of(r.vars);
        j["normalization"] = to_json(r.normalization);
        j["terms"] = r.value.size();
        j["value"] = to_json(r.value);
        j["text"] = to_text(r.value);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "model: " << to_string(*model) << "\n"
       << "method: " << to_string(r.method) << "\n"
       << "vars: " << join(names_of(r.vars), ", ") << "\n"
       << "normalization: " << r.normalization.to_string() << "\n"
       << "terms: " << r.value.size() << "\n"
       << "value: " << to_text(r.value) << "\n";
    return os.str();
}

// ---- dump -------------------------------------------------------------------

LaurentPoly family_value(const RunConfig& c, const VarSetPtr& vs) {
    const std::string& f = c.family;
    const bool indexed = f == "e" || f == "eps" || f == "eps-conv" || f == "mu" || f == "nu" || f == "lambda";
    if (indexed && !c.has_index) throw UsageError("family " + f + " needs --m (or --i)");
    if (!indexed && c.has_index) throw UsageError("family " + f + " takes no index");
    if (f == "e") return elem_E(vs, c.index);
    if (f == "eps") return eps(vs, c.index);
    if (f == "eps-conv") return eps_conv(vs, c.index);
    if (f == "mu") return mu(vs, c.index);
    if (f == "nu") return nu(vs, c.index);
    if (f == "lambda") return lam(vs, c.index);
    if (f == "pp") return Pp_fixed(vs);
    if (f == "p") return P_open_fixed(vs);
    throw UsageError("unknown --family '" + f + "' (e, eps, eps-conv, mu, nu, lambda, pp, p)");
}

std::string cmd_dump(const RunConfig& c) {
    if (c.family.empty() == c.matrix.empty()) throw UsageError("give exactly one of --family and --matrix");
    auto vs = vars_of(c);
    if (!c.family.empty()) {
        auto v = family_value(c, vs);
        if (c.format == "json") {
            json j;
            j["command"] = "dump";
            j["family"] = c.family;
            j["index"] = c.has_index ? json(c.index) : json(nullptr);
            j["vars"] = names_of(vs);
            j["value"] = to_json(v);
            j["text"] = to_text(v);
            return j.dump(2) + "\n";
        }
        return to_text(v) + "\n";
    }
    auto kind = parse_matrix_kind(upper_snake(c.matrix));
    if (!kind) {
        std::vector<std::string> known;
        for (auto k : all_matrix_kinds()) known.push_back(kebab(to_string(k)));
        throw UsageError("unknown --matrix '" + c.matrix + "' (" + join(known, ", ") + ")");
    }
    auto m = build_matrix(*kind, vs);
    if (c.format == "json") {
        json j;
        j["command"] = "dump";
        j["matrix"] = kebab(to_string(*kind));
        j["vars"] = names_of(vs);
        j["rows"] = m.rows();
        j["cols"] = m.cols();
        json entries = json::array(), text = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array(), trow = json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) {
                row.push_back(to_json(m(i, k)));
                trow.push_back(to_text(m(i, k)));
            }
            entries.push_back(row);
            text.push_back(trow);
        }
        j["entries"] = entries;
        j["text"] = text;
        return j.dump(2) + "\n";
    }
    if (m.rows() == 0) return "[]\n";
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i == 0 ? "[[" : " [";
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (k) s += ", ";
            s += to_text(m(i, k));
        }
        s += i + 1 == m.rows() ? "]]\n" : "],\n";
    }
    return s;
}

// ---- verify -----------------------------------------------------------------

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

unsigned default_jobs() {
    const char* env = std::getenv(kJobsEnv);
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw UsageError(std::string(kJobsEnv) + " must be a positive integer");
    return static_cast<unsigned>(v);
}

struct Skipped {
    IdentityId id;
    int L;
    std::string reason;
};

std::string cmd_verify(const RunConfig& c, int& code) {
    if (c.ids.empty() == c.suite.empty()) throw UsageError("give exactly one of --id and --suite");
    if (c.has_L && (c.has_min || c.has_max)) throw UsageError("--L excludes --min-L and --max-L");
    if (c.mode != "symbolic" && c.mode != "random") throw UsageError("--mode must be symbolic or random");
    if (c.trials < 1) throw UsageError("--trials must be >= 1");
    if (c.has_ceiling && c.max_symbolic_L < 1) throw UsageError("--max-symbolic-L must be >= 1");

    std::vector<IdentityId> ids;
    if (!c.suite.empty()) {
        auto s = parse_suite(c.suite);
        if (!s) throw UsageError("--suite must be periodic, open or all");
        ids = suite_identities(*s);
    } else {
        for (const auto& name : c.ids) {
            auto id = parse_identity(name);
            if (!id) throw UsageError("unknown identity '" + name + "'");
            ids.push_back(*id);
        }
    }

    const std::uint64_t seed = c.has_seed ? c.seed : fresh_seed();
    const VerifyMode mode = c.mode == "random" ? VerifyMode::random(c.trials, seed) : VerifyMode::symbolic(seed);
    VerifyOptions opts;
    if (c.has_ceiling) opts.ceiling = c.max_symbolic_L;
    opts.corrupt = c.corrupt;

    std::vector<VerifyTask> tasks;
    std::vector<Skipped> skipped;
    const bool strict = c.has_L && c.suite.empty();
    for (IdentityId id : ids) {
        int lo, hi;
        if (c.has_L) {
            lo = hi = c.L;
        } else {
            lo = c.has_min ? c.min_L : min_size(id);
            hi = c.has_max ? c.max_L : opts.ceiling.value_or(symbolic_ceiling(id));
        }
        for (int L = lo; L <= hi; ++L) {
            if (auto why = size_rule_violation(id, L, mode, opts)) {
                if (strict) throw UsageError(*why + " (see --max-symbolic-L)");
                // ranges below the stated minimum are silently clipped
                if (L >= min_size(id)) skipped.push_back({id, L, *why});
                continue;
            }
            tasks.push_back({id, L});
        }
    }
    if (tasks.empty()) throw UsageError("nothing to verify in the requested range");

    const unsigned jobs = c.has_jobs ? c.jobs : default_jobs();
    if (jobs < 1) throw UsageError("--jobs must be >= 1");
    auto reports = run_suite(tasks, mode, opts, jobs);

    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.passed() ? 0 : 1;
    code = failed ? kFail : kPass;

    if (c.format == "json") {
        json j;
        j["command"] = "verify";
        j["mode"] = c.mode;
        if (mode.kind == VerifyMode::Kind::RANDOM) j["trials"] = c.trials;
        j["seed"] = seed;
        json rs = json::array();
        for (const auto& r : reports) rs.push_back(to_json(r, c.timing));
        j["reports"] = rs;
        json sk = json::array();
        for (const auto& s : skipped) sk.push_back({{"id", to_string(s.id)}, {"L", s.L}, {"reason", s.reason}});
        j["skipped"] = sk;
        j["summary"] = {{"reports", reports.size()},
                        {"passed", reports.size() - failed},
                        {"failed", failed},
                        {"skipped", skipped.size()}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "# verify mode=" << c.mode;
    if (mode.kind == VerifyMode::Kind::RANDOM) os << " trials=" << c.trials;
    os << " seed=" << seed << "\n";
    for (const auto& r : reports) {
        os << to_string(r.id) << " L=" << r.L << " " << to_string(r.verdict);
        if (r.verdict == Verdict::PROPORTIONAL) os << " c=" << r.constant.to_string();
        if (r.verdict == Verdict::FAIL) {
            if (r.details.contains("failed_check")) os << " check=" << r.details["failed_check"].get<std::string>();
            if (r.witness) os << " witness=" << r.witness->to_string();
        }
        if (c.timing) os << " ms=" << r.millis;
        os << "\n";
    }
    for (const auto& s : skipped) os << "# skipped " << to_string(s.id) << " L=" << s.L << ": " << s.reason << "\n";
    os << "summary: " << reports.size() << " reports, " << reports.size() - failed << " passed, " << failed
       << " failed, " << skipped.size() << " skipped\n";
    return os.str();
}

// ---- golden -----------------------------------------------------------------

struct GoldenCase {
    std::string path;
    std::vector<std::string> args;
};

std::vector<GoldenCase> golden_cases() {
    std::vector<GoldenCase> g;
    auto compute = [&](const std::string& model, const std::string& method, int L) {
        g.push_back({"compute/" + model + "_" + method + "_L" + std::to_string(L) + ".json",
                     {"compute", "--model", model, "--method", method, "--L", std::to_string(L), "--format", "json"}});
    };
    for (int L = 1; L <= 4; ++L) compute("periodic", "det-e", L);
    for (int L = 2; L <= 4; ++L) compute("periodic", "det-mu", L);
    for (int L = 1; L <= 3; ++L) compute("periodic", "oracle", L);
    for (int L = 1; L <= 4; ++L) compute("open", "det-lambda", L);
    for (int L = 1; L <= 4; ++L) compute("open", "det-nu", L);
    for (int L = 2; L <= 4; ++L) compute("open", "v-over-pp", L);
    for (int L = 0; L <= 3; ++L) compute("open", "oracle", L);

    auto family = [&](const std::string& f, int L, std::optional<int> idx) {
        std::string name = "dump/" + f + "_L" + std::to_string(L) + (idx ? "_" + std::to_string(*idx) : "") + ".json";
        std::vector<std::string> a{"dump", "--family", f, "--L", std::to_string(L), "--format", "json"};
        if (idx) a.insert(a.end(), {"--m", std::to_string(*idx)});
        g.push_back({name, a});
    };
    family("eps", 1, 1);
    family("nu", 1, 1);
    family("mu", 2, 2);
    family("lambda", 3, 0);
    family("pp", 1, std::nullopt);
    family("p", 1, std::nullopt);
    family("p", 2, std::nullopt);
    for (const char* m : {"e-staircase", "eps-doubled", "v-minus", "w-plus", "mu", "nu-diff", "lambda-diff"}) {
        g.push_back({std::string("dump/matrix_") + m + "_L3.json",
                     {"dump", "--matrix", m, "--L", "3", "--format", "json"}});
    }

    g.push_back({"verify/ztilde-vw.json",
                 {"verify", "--id", "ztilde-vw", "--min-L", "1", "--max-L", "4", "--seed", "0", "--format", "json"}});
    g.push_back({"verify/wrec.json",
                 {"verify", "--id", "wrec", "--max-L", "4", "--seed", "0", "--format", "json"}});
    g.push_back({"verify/rec2-open.json",
                 {"verify", "--id", "rec2-open", "--max-L", "4", "--seed", "0", "--format", "json"}});
    g.push_back({"verify/cross-open.json",
                 {"verify", "--id", "cross-open", "--max-L", "3", "--seed", "0", "--format", "json"}});
    return g;
}

std::string cmd_golden(const RunConfig& c, int& code) {
    namespace fs = std::filesystem;
    if (c.dir.empty()) throw UsageError("golden needs --dir");
    std::ostringstream report;
    std::size_t bad = 0, n = 0;
    for (const auto& g : golden_cases()) {
        std::ostringstream o, e;
        int rc = run(g.args, o, e);
        if (rc != kPass && rc != kFail) throw std::runtime_error("golden case " + g.path + " exited " + std::to_string(rc) + ": " + e.str());
        const fs::path p = fs::path(c.dir) / g.path;
        ++n;
        if (c.check) {
            std::ifstream in(p, std::ios::binary);
            std::stringstream have;
            have << in.rdbuf();
            if (!in || have.str() != o.str()) {
                ++bad;
                report << (in ? "differs: " : "missing: ") << g.path << "\n";
            }
        } else {
            fs::create_directories(p.parent_path());
            std::ofstream(p, std::ios::binary) << o.str();
        }
    }
    code = bad ? kFail : kPass;
    report << "golden: " << n << (c.check ? " files checked, " : " files written, ") << bad << " mismatched\n";
    return report.str();
}

// ---- parsing ----------------------------------------------------------------

void add_vars(CLI::App* s, RunConfig& c) {
    s->add_option("--L", c.L, "size: variables z1..zL");
    s->add_option("--vars", c.vars, "explicit variable names")->delimiter(',');
}

void add_output(CLI::App* s, RunConfig& c) {
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", c.out, "write output to a file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"dtlsum: exact sum rules of the dilute loop model at n = 1", "dtlsum"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "compute a sum rule by one route");
    add_vars(compute, c);
    compute->add_option("--model", c.model, "periodic or open")->required();
    compute->add_option("--method", c.method, "det-e, det-mu, v-over-pp, w-over-p, det-nu, det-lambda, oracle")
        ->required();
    compute->add_flag("--raw", c.raw, "skip the comparison against the reference route");
    add_output(compute, c);

    auto* verify_cmd = app.add_subcommand("verify", "check identities");
    verify_cmd->add_option("--id", c.ids, "identity ids")->delimiter(',');
    verify_cmd->add_option("--suite", c.suite, "periodic, open or all");
    verify_cmd->add_option("--L", c.L, "single size");
    verify_cmd->add_option("--min-L", c.min_L, "smallest size (default: per identity)");
    verify_cmd->add_option("--max-L", c.max_L, "largest size (default: the symbolic ceiling)");
    verify_cmd->add_option("--mode", c.mode, "symbolic or random");
    verify_cmd->add_option("--trials", c.trials, "random points per identity")->capture_default_str();
    verify_cmd->add_option("--seed", c.seed, "seed (drawn and reported when absent)");
    verify_cmd->add_option("--jobs", c.jobs, std::string("worker threads (default: $") + kJobsEnv + " or 1)");
    verify_cmd->add_option("--max-symbolic-L", c.max_symbolic_L, "override the symbolic ceilings (6 periodic, 5 open)");
    verify_cmd->add_flag("--timing", c.timing, "report wall time per identity");
    verify_cmd->add_flag("--corrupt", c.corrupt, "perturb the first check (sanity test of the checker)");
    add_output(verify_cmd, c);

    auto* dump = app.add_subcommand("dump", "print a symmetric family or a matrix");
    add_vars(dump, c);
    dump->add_option("--family", c.family, "e, eps, eps-conv, mu, nu, lambda, pp, p");
    dump->add_option("--matrix", c.matrix, "e-staircase, eps-doubled, v-minus, w-plus, mu, nu-diff, lambda-diff");
    dump->add_option("--m,--i", c.index, "family index");
    add_output(dump, c);

    auto* golden = app.add_subcommand("golden", "write or check the golden files");
    golden->add_option("--dir", c.dir, "golden directory")->required();
    golden->add_flag("--check", c.check, "compare instead of writing");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }

    for (auto* s : {compute, verify_cmd, dump}) {
        if (!s->parsed()) continue;
        c.has_L = s->count("--L") > 0;
        if (s != verify_cmd) c.has_vars = s->count("--vars") > 0;
    }
    c.has_min = verify_cmd->count("--min-L") > 0;
    c.has_max = verify_cmd->count("--max-L") > 0;
    c.has_seed = verify_cmd->count("--seed") > 0;
    c.has_jobs = verify_cmd->count("--jobs") > 0;
    c.has_ceiling = verify_cmd->count("--max-symbolic-L") > 0;
    c.has_index = dump->count("--m") > 0;

    int code = kPass;
    std::string body;
    try {
        if (compute->parsed()) body = cmd_compute(c);
        else if (verify_cmd->parsed()) body = cmd_verify(c, code);
        else if (dump->parsed()) body = cmd_dump(c);
        else body = cmd_golden(c, code);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SizeRuleError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DivisibilityFailure& e) {
        err << "algebraic failure: " << e.what() << "\n";
        return kAlgebra;
    } catch (const MethodMismatch& e) {
        err << "algebraic failure: " << e.what();
        if (e.witness()) err << " at " << e.witness()->to_string();
        err << "\n";
        return kAlgebra;
    } catch (const std::exception& e) {
        err << "algebraic failure: " << e.what() << "\n";
        return kAlgebra;
    }

    if (!c.out.empty()) {
        std::ofstream f(c.out, std::ios::binary);
        if (!(f << body)) {
            err << "error: cannot write " << c.out << "\n";
            return kUsage;
        }
    } else {
        out << body;
    }
    return code;
}

}  // namespace dtlsum::cli
