#include "virasoro/cli.hpp"

#include "virasoro/checks.hpp"
#include "virasoro/expr.hpp"
#include "virasoro/linalg.hpp"
#include "virasoro/tensor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace virasoro::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rat rational_arg(const std::string& flag, const std::string& text) {
    try {
        return Rat::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("invalid rational '" + text + "' for " + flag);
    }
}

EnvElem elem_arg(const std::string& flag, const std::string& text) {
    try {
        return parse_env_elem(text);
    } catch (const ParseError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

int cap_from_env() {
    const char* env = std::getenv("VIRASORO_LEVEL_CAP");
    if (env == nullptr || *env == '\0') return default_level_cap;
    try {
        std::size_t used = 0;
        const int cap = std::stoi(env, &used);
        if (used == std::string(env).size() && cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("invalid level cap '") + env + "' in VIRASORO_LEVEL_CAP");
}

Json roots_json(const PhiSet& phi) {
    if (phi.all_integers) return phi.zero_excluded ? "all_integers_except_0" : "all_integers";
    return phi.roots;
}

Json params_json(const Rat& alpha, const Rat& beta, const ModuleParams& canonical) {
    return {{"alpha", alpha.str()},
            {"beta", beta.str()},
            {"canonical_alpha", canonical.alpha.str()},
            {"canonical_beta", canonical.beta.str()},
            {"primed_zero", canonical.primed_zero()}};
}

Json gens_json(const MaximalSubmoduleGens& g) {
    Json list = Json::array();
    const auto distinct = g.distinct();
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        list.push_back({{"level", i == 0 ? g.levels.first : g.levels.second}, {"element", distinct[i].str()}});
    }
    return {{"status", to_string(g.status)}, {"cap", g.cap}, {"generators", list}};
}

// Text rendering: one "key: value" line per scalar, nested blocks indented.
bool is_flat(const Json& v) {
    if (!v.is_array()) return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured() && !x.is_string(); });
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
        return s + "]";
    }
    return v.dump();
}

void render(const Json& v, int indent, std::ostream& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_array()) {
        for (const auto& item : v) {
            if (is_flat(item)) {
                out << pad << "- " << scalar_text(item) << '\n';
            } else {
                out << pad << "-\n";
                render(item, indent + 2, out);
            }
        }
        return;
    }
    for (const auto& [key, value] : v.items()) {
        if (is_flat(value)) {
            out << pad << key << ": " << scalar_text(value) << '\n';
        } else {
            out << pad << key << ":\n";
            render(value, indent + 2, out);
        }
    }
}

struct Outcome {
    Json result = Json::object();
    Json parameters = Json::object();
    std::vector<std::string> caveats;
    int status = exit_ok;
};

struct Options {
    std::string format = "text";
    std::optional<int> cap;
    std::string c, h, alpha, beta, elem, state_file;
    std::string c2, h2, alpha2, beta2;
    int level = 1;
    std::optional<long> n;
    bool symbolic = false;
    int gen = 0;
    long j = 0;
    int max_n = 5;
    std::vector<int> checks;
    std::optional<long> min_exponent, max_exponent;
    std::optional<int> max_level;
};

HighestWeight hw_arg(const Options& o) { return {rational_arg("--c", o.c), rational_arg("--h", o.h)}; }

Outcome cmd_singular(const Options& o, int) {
    const HighestWeight hw = hw_arg(o);
    if (o.level < 1) throw UsageError("invalid level '" + std::to_string(o.level) + "' for --level");
    Outcome r;
    const auto found = singular_vectors_at_level(hw, o.level);
    Json list = Json::array();
    for (const auto& v : found) list.push_back(v.elem().str());
    r.parameters = {{"c", hw.c.str()}, {"h", hw.h.str()}, {"level", o.level}};
    r.result = {{"weight", (hw.h - Rat(o.level)).str()},
                {"dimension", found.size()},
                {"partition_count", partition_count(o.level)},
                {"vectors", list}};
    return r;
}

Outcome cmd_gens(const Options& o, int cap) {
    const HighestWeight hw = hw_arg(o);
    Outcome r;
    const auto g = maximal_submodule_generators(hw, cap);
    r.parameters = {{"c", hw.c.str()}, {"h", hw.h.str()}};
    r.result = gens_json(g);
    if (g.status == GenStatus::undetermined_beyond_cap) {
        r.caveats.push_back("no singular vector up to level " + std::to_string(cap) +
                            "; J(c,h) may have generators above the cap");
        r.status = exit_caveat;
    } else if (g.status == GenStatus::single_generator) {
        r.caveats.push_back("one generator found up to level " + std::to_string(cap) +
                            "; a second generator may lie above the cap");
    }
    return r;
}

Outcome cmd_phi(const Options& o, int) {
    const Rat alpha = rational_arg("--alpha", o.alpha), beta = rational_arg("--beta", o.beta);
    const EnvElem x = elem_arg("--elem", o.elem);
    const ModuleParams params{alpha, beta, false};
    Outcome r;
    r.parameters = {{"alpha", alpha.str()}, {"beta", beta.str()}, {"elem", x.str()}};
    if (o.n) {
        r.result = {{"n", *o.n}, {"value", phi_eval(params, *o.n, x).str()}};
    } else if (o.symbolic) {
        r.result = {{"symbolic", phi_symbolic(x).str()}};
    } else {
        const MPoly p = phi_poly(params, x).poly;
        const IntegerRoots roots = integer_roots(p);
        r.result = {{"polynomial", p.str()}};
        if (roots.all_integers) {
            r.result["integer_roots"] = "all_integers";
        } else {
            r.result["integer_roots"] = roots.roots;
        }
    }
    return r;
}

Outcome simplicity_outcome(const Options& o, int cap, bool chain) {
    const HighestWeight hw = hw_arg(o);
    const Rat alpha = rational_arg("--alpha", o.alpha), beta = rational_arg("--beta", o.beta);
    const ModuleParams params = canonicalize(alpha, beta);
    const auto report = simplicity(hw, params, maximal_submodule_generators(hw, cap));
    Outcome r;
    r.parameters = {{"c", hw.c.str()}, {"h", hw.h.str()}};
    r.parameters.update(params_json(alpha, beta, params));
    r.result = {{"verdict", to_string(report.verdict)},
                {"phi", report.phi.str()},
                {"phi_roots", roots_json(report.phi)},
                {"minimal_submodule_index", report.minimal_submodule_index ? Json(*report.minimal_submodule_index) : Json()}};
    if (chain) {
        r.result["generators"] = gens_json(report.gens);
        Json steps = Json::array();
        std::optional<std::int64_t> previous;
        for (const auto& step : report.filtration) {
            const std::string upper = previous ? "W^(" + std::to_string(*previous) + ")" : "W";
            steps.push_back({{"n", step.n},
                             {"quotient", upper + " / W^(" + std::to_string(step.n) + ")"},
                             {"highest_weight", step.quotient.str()}});
            previous = step.n;
        }
        r.result["filtration"] = steps;
        r.result["infinite_filtration"] = report.infinite_filtration;
        if (report.minimal_submodule_index) {
            r.result["simple_submodule"] = "W^(" + std::to_string(*report.minimal_submodule_index) + ")";
        }
    }
    r.caveats = report.caveats;
    if (report.verdict == Verdict::undetermined) r.status = exit_caveat;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read state file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Window window_arg(const Options& o, int cap) {
    Window w;
    w.max_level = o.max_level.value_or(cap);
    if (o.min_exponent) w.min_exponent = *o.min_exponent;
    if (o.max_exponent) w.max_exponent = *o.max_exponent;
    return w;
}

Json params_only(const Rat& alpha, const Rat& beta, const ModuleParams& p, const HighestWeight& hw) {
    Json j = {{"c", hw.c.str()}, {"h", hw.h.str()}};
    j.update(params_json(alpha, beta, p));
    return j;
}

void note_shift(Outcome& r, const Rat& alpha, const ModuleParams& p) {
    if (alpha != p.alpha) {
        r.caveats.push_back("alpha reduced to " + p.alpha.str() + "; v(j) indices refer to the canonical module");
    }
}

Outcome cmd_act(const Options& o, int cap) {
    const HighestWeight hw = hw_arg(o);
    const Rat alpha = rational_arg("--alpha", o.alpha), beta = rational_arg("--beta", o.beta);
    const ModuleParams params = canonicalize(alpha, beta);
    std::vector<StateTerm> terms;
    try {
        terms = parse_state(read_file(o.state_file));
    } catch (const ParseError& e) {
        throw UsageError("--state " + o.state_file + ": " + e.what());
    }
    Outcome r;
    r.parameters = params_only(alpha, beta, params, hw);
    r.parameters["gen"] = o.gen;
    note_shift(r, alpha, params);
    const auto module = TensorModule::create(hw, params, maximal_submodule_generators(hw, cap), window_arg(o, cap));
    try {
        TensorVector v(module);
        for (const auto& t : terms) {
            for (const auto& [p, c] : t.elem.terms()) v.add(VermaVector(hw, p.size(), EnvElem(p, c)), t.j);
        }
        const TensorVector out = tensor_apply(o.gen, v);
        r.result = {{"input", v.is_zero() ? "0" : v.str()}, {"output", out.is_zero() ? "0" : out.str()}};
    } catch (const WindowError& e) {
        r.result = {{"window_exceeded", true}};
        r.caveats.push_back(e.what());
        r.status = exit_caveat;
    }
    return r;
}

Outcome cmd_classify(const Options& o, int) {
    const TensorTuple a{{rational_arg("--c1", o.c), rational_arg("--h1", o.h)},
                        {rational_arg("--alpha1", o.alpha), rational_arg("--beta1", o.beta), false}};
    const TensorTuple b{{rational_arg("--c2", o.c2), rational_arg("--h2", o.h2)},
                        {rational_arg("--alpha2", o.alpha2), rational_arg("--beta2", o.beta2), false}};
    auto tuple = [](const TensorTuple& t) {
        const ModuleParams p = canonicalize(t.params);
        return Json{{"c", t.hw.c.str()}, {"h", t.hw.h.str()}, {"alpha", p.alpha.str()}, {"beta", p.beta.str()}};
    };
    Outcome r;
    r.parameters = {{"first", tuple(a)}, {"second", tuple(b)}};
    r.result = {{"isomorphic", classify_isomorphism(a, b)}};
    return r;
}

Outcome cmd_casimir(const Options& o, int cap) {
    const HighestWeight hw = hw_arg(o);
    const Rat alpha = rational_arg("--alpha", o.alpha), beta = rational_arg("--beta", o.beta);
    const ModuleParams params = canonicalize(alpha, beta);
    if (o.max_n < 1) throw UsageError("invalid bound '" + std::to_string(o.max_n) + "' for --max-n");
    Outcome r;
    r.parameters = params_only(alpha, beta, params, hw);
    r.parameters["j"] = o.j;
    r.parameters["max_n"] = o.max_n;
    note_shift(r, alpha, params);
    const auto module = TensorModule::create(hw, params, maximal_submodule_generators(hw, cap), window_arg(o, cap));
    try {
        const TensorVector start = TensorVector::highest(module, o.j);
        std::map<TensorVector::Key, std::size_t> index;
        std::vector<TensorVector> images;
        Json dims = Json::array(), vectors = Json::array();
        bool monotone = true, increases = false;
        std::size_t last = 0;
        for (int k = 1; k <= o.max_n; ++k) {
            images.push_back(casimir_apply(k, start));
            for (const auto& [key, c] : images.back().terms()) index.try_emplace(key, index.size());
            std::vector<RatVector> rows;
            for (const auto& v : images) {
                RatVector x(index.size());
                for (const auto& [key, c] : v.terms()) x[index.at(key)] = c;
                rows.push_back(std::move(x));
            }
            const std::size_t dim = SubspaceReducer(rows, index.size()).rank();
            if (k > 1 && dim < last) monotone = false;
            if (k > 1 && dim > last) increases = true;
            last = dim;
            dims.push_back(dim);
            vectors.push_back({{"k", k}, {"value", images.back().is_zero() ? "0" : images.back().str()}});
        }
        r.result = {{"dimensions", dims}, {"non_decreasing", monotone}, {"strictly_increases", increases},
                    {"images", vectors}};
    } catch (const WindowError& e) {
        r.result = {{"window_exceeded", true}};
        r.caveats.push_back(e.what());
        r.status = exit_caveat;
    }
    r.caveats.push_back("finite probe only: the span is computed for k <= " + std::to_string(o.max_n));
    return r;
}

Outcome cmd_selftest(const Options& o, int, Json& timing) {
    Outcome r;
    std::vector<int> ids = o.checks.empty() ? check_ids() : o.checks;
    const auto known = check_ids();
    for (int id : ids) {
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            throw UsageError("unknown check '" + std::to_string(id) + "' for --check");
        }
    }
    Json list = Json::array();
    Json seconds = Json::object();
    int failed = 0;
    for (int id : ids) {
        const CheckResult c = run_check(id);
        list.push_back({{"id", c.id}, {"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"notes", c.notes}});
        seconds[std::to_string(id)] = c.seconds;
        if (!c.pass) ++failed;
    }
    r.result = {{"checks", list}, {"passed", ids.size() - static_cast<std::size_t>(failed)}, {"failed", failed}};
    timing["checks"] = seconds;
    if (failed) r.status = exit_caveat;
    return r;
}

void add_hw(CLI::App* sub, Options& o) {
    sub->add_option("--c", o.c, "central charge c (p or p/q)")->required();
    sub->add_option("--h", o.h, "highest weight h")->required();
}

void add_params(CLI::App* sub, Options& o) {
    sub->add_option("--alpha", o.alpha, "intermediate series alpha")->required();
    sub->add_option("--beta", o.beta, "intermediate series beta")->required();
}

void add_window(CLI::App* sub, Options& o) {
    sub->add_option("--min-exponent", o.min_exponent, "smallest shifted exponent kept");
    sub->add_option("--max-exponent", o.max_exponent, "largest shifted exponent kept");
    sub->add_option("--max-level", o.max_level, "largest Verma level kept (default: the level cap)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Virasoro tensor product simplicity tool", "virasoro"};
    app.set_help_flag("--help", "print help");  // -h would collide with --h
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", o.cap, "level cap for the singular vector scan (default 12 or VIRASORO_LEVEL_CAP)")
        ->check(CLI::PositiveNumber);

    auto* singular = app.add_subcommand("singular", "singular vectors of M(c,h) at one level");
    add_hw(singular, o);
    singular->add_option("--level", o.level, "level")->required();

    auto* gens = app.add_subcommand("gens", "generators of the maximal submodule J(c,h)");
    add_hw(gens, o);

    auto* phi = app.add_subcommand("phi", "the phi_n functional on an element of U(Vir_-)");
    add_params(phi, o);
    auto* n_opt = phi->add_option("--n", o.n, "evaluate at this integer n");
    phi->add_flag("--symbolic", o.symbolic, "keep n, a, b symbolic")->excludes(n_opt);
    phi->add_option("--elem", o.elem, "element, e.g. \"3*d(-2)^2 + 5*d(-4)\"")->required();

    auto* simp = app.add_subcommand("simplicity", "decide simplicity of V(c,h) (x) V'(alpha,beta)");
    add_hw(simp, o);
    add_params(simp, o);

    auto* filt = app.add_subcommand("filtration", "simplicity with the filtration chain");
    add_hw(filt, o);
    add_params(filt, o);

    auto* act = app.add_subcommand("act", "apply d_m to a state of V(c,h) (x) V'(alpha,beta)");
    add_hw(act, o);
    add_params(act, o);
    act->add_option("--gen", o.gen, "index m of d_m")->required();
    act->add_option("--state", o.state_file, "file holding terms like 3*d(-2)*d(-1) @v(4)")->required();
    add_window(act, o);

    auto* cls = app.add_subcommand("classify", "are two tensor products isomorphic");
    cls->add_option("--c1", o.c, "first c")->required();
    cls->add_option("--h1", o.h, "first h")->required();
    cls->add_option("--alpha1", o.alpha, "first alpha")->required();
    cls->add_option("--beta1", o.beta, "first beta")->required();
    cls->add_option("--c2", o.c2, "second c")->required();
    cls->add_option("--h2", o.h2, "second h")->required();
    cls->add_option("--alpha2", o.alpha2, "second alpha")->required();
    cls->add_option("--beta2", o.beta2, "second beta")->required();

    auto* cas = app.add_subcommand("casimir-probe", "span dimensions of Q_k(u (x) v_j), k = 1..max-n");
    add_hw(cas, o);
    add_params(cas, o);
    cas->add_option("--j", o.j, "index j of the start vector u (x) v_j")->required();
    cas->add_option("--max-n", o.max_n, "largest k")->required();
    add_window(cas, o);

    auto* self = app.add_subcommand("selftest", "run the golden checks on the worked examples");
    self->add_option("--check", o.checks, "run only these check ids");

    // CLI11 reports a misspelt subcommand only as a missing one; name it here.
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--format" || a == "--cap") {
            ++i;
            continue;
        }
        if (a.rfind("-", 0) == 0) continue;
        bool known = false;
        for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == a;
        if (!known) {
            err << "error: unknown subcommand '" << a << "'\n";
            return exit_usage;
        }
        break;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    const auto start = std::chrono::steady_clock::now();
    Json timing = Json::object();
    Outcome outcome;
    int cap = default_level_cap;
    try {
        cap = o.cap ? *o.cap : cap_from_env();
        if (name == "singular") outcome = cmd_singular(o, cap);
        else if (name == "gens") outcome = cmd_gens(o, cap);
        else if (name == "phi") outcome = cmd_phi(o, cap);
        else if (name == "simplicity") outcome = simplicity_outcome(o, cap, false);
        else if (name == "filtration") outcome = simplicity_outcome(o, cap, true);
        else if (name == "act") outcome = cmd_act(o, cap);
        else if (name == "classify") outcome = cmd_classify(o, cap);
        else if (name == "casimir-probe") outcome = cmd_casimir(o, cap);
        else outcome = cmd_selftest(o, cap, timing);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    Json report;
    report["command"] = name;
    report["level_cap"] = cap;
    report["parameters"] = outcome.parameters;
    report["result"] = outcome.result;
    report["caveats"] = outcome.caveats;
    timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["timing"] = timing;

    if (o.format == "json") {
        out << report.dump(2) << '\n';
    } else {
        render(report, 0, out);
    }
    return outcome.status;
}

}  // namespace virasoro::cli
