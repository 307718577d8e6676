#include "loglie/analysis.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace loglie {

namespace {

using json = nlohmann::ordered_json;

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Splits "[a, b(c, d), e]" at top-level commas.
std::vector<std::string> split_list(const std::string& raw, std::size_t line)
{
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']')
            throw InputError("line " + std::to_string(line) + ": unterminated list");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(')
            ++depth;
        if (ch == ')')
            --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty() || !out.empty())
        out.push_back(trim(cur));
    for (const auto& x : out)
        if (x.empty())
            throw InputError("line " + std::to_string(line) + ": empty list entry");
    return out;
}

std::size_t parse_count(const std::string& v, std::size_t line)
{
    std::size_t pos = 0;
    unsigned long long x = 0;
    try {
        x = std::stoull(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != v.size() || v.front() == '-')
        throw InputError("line " + std::to_string(line) + ": expected a nonnegative integer, got '" + v + "'");
    return static_cast<std::size_t>(x);
}

std::vector<VectorField> parse_basis(const InputSpec& input, const RingPtr& ring)
{
    std::vector<VectorField> out;
    for (const auto& row : input.basis) {
        VectorField v;
        for (const auto& e : row)
            v.coeffs.push_back(parse_polynomial(e, ring));
        out.push_back(std::move(v));
    }
    return out;
}

void fail(AnalysisReport& r, const std::string& stage, const std::string& what, int code)
{
    r.errors.push_back(stage + ": " + what);
    if (r.exit_code == kOk)
        r.exit_code = code;
}

/// Runs a stage, mapping exceptions to exit codes. Returns false on failure.
template <class F>
bool stage(AnalysisReport& r, const std::string& name, F&& body)
{
    try {
        body();
        return true;
    } catch (const ParseError& e) {
        fail(r, name, e.what(), kInputError);
    } catch (const NotReduced& e) {
        fail(r, name, e.what(), kInputError);
    } catch (const InputError& e) {
        fail(r, name, e.what(), kInputError);
    } catch (const std::invalid_argument& e) {
        fail(r, name, e.what(), kInputError);
    } catch (const std::logic_error& e) {
        fail(r, name, e.what(), kInternal);
    } catch (const std::runtime_error& e) {
        fail(r, name, e.what(), kUnsupported);
    }
    return false;
}

json rational_list(const std::vector<Rational>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

std::vector<Rational> rationals_from(const json& a)
{
    std::vector<Rational> out;
    for (const auto& x : a)
        out.push_back(rational_from_string(x.get<std::string>()));
    return out;
}

template <class T>
json opt(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

std::string join(const std::vector<std::string>& xs, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + xs[i];
    return out;
}

} // namespace

InputSpec parse_input(const std::string& text)
{
    InputSpec spec;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    std::map<std::size_t, std::vector<std::string>> basis;
    bool have_vars = false, have_f = false;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw = raw.substr(0, hash);
        if (trim(raw).empty())
            continue;
        auto eq = raw.find('=');
        if (eq == std::string::npos)
            throw InputError("line " + std::to_string(line) + ": expected 'key = value'");
        std::string key = trim(raw.substr(0, eq));
        std::string value = trim(raw.substr(eq + 1));
        if (key == "vars") {
            spec.vars = split_list(value, line);
            have_vars = true;
        } else if (key == "f") {
            spec.f = value;
            have_f = true;
        } else if (key.rfind("basis.", 0) == 0) {
            std::size_t idx = parse_count(key.substr(6), line);
            if (idx == 0 || basis.count(idx))
                throw InputError("line " + std::to_string(line) + ": bad or repeated basis index");
            basis[idx] = split_list(value, line);
        } else if (key == "jet") {
            spec.jet = static_cast<unsigned>(parse_count(value, line));
        } else if (key == "budget") {
            spec.budget = parse_count(value, line);
        } else if (key == "bound") {
            spec.bound = parse_count(value, line);
        } else {
            throw InputError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    if (!have_vars || spec.vars.empty())
        throw InputError("missing vars");
    if (!have_f || spec.f.empty())
        throw InputError("missing f");
    std::size_t expect = 1;
    for (auto& [idx, row] : basis) {
        if (idx != expect++)
            throw InputError("basis indices must run 1.." + std::to_string(basis.size()));
        if (row.size() != spec.vars.size())
            throw InputError("basis." + std::to_string(idx) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(spec.vars.size()));
        spec.basis.push_back(std::move(row));
    }
    return spec;
}

InputSpec read_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

AnalysisReport run_analyze(const InputSpec& input, AnalyzeOptions options)
{
    AnalysisReport r;
    if (input.budget)
        options.limits.budget = *input.budget;
    if (input.bound)
        options.limits.bound = *input.bound;
    if (!options.jet)
        options.jet = input.jet;

    std::optional<Polynomial> f;
    if (!stage(r, "input", [&] {
            RingPtr ring = make_ring(input.vars);
            f = parse_polynomial(input.f, ring);
            if (f->is_zero())
                throw InputError("f is zero");
            if (f->constant_term() != 0)
                throw InputError("f does not vanish at the origin");
        }))
        return r;

    r.order = order_at_origin(*f);
    std::optional<QuasihomogeneousWeights> qh = quasihomogeneous_weights(*f);
    if (qh)
        r.qh_weights = qh->weights;
    else
        r.flags.push_back("global approximation");
    stage(r, "singular locus", [&] { r.sing_dim = ideal_dimension(jacobian_ideal(*f)); });

    std::optional<LogDerivationModule> m;
    if (!stage(r, "logarithmic derivations", [&] { m = logarithmic_derivations(*f); }))
        return r;
    r.product_test = product_test(*m);
    if (!*r.product_test) {
        fail(r, "product test", ProductTestFailed().what(), kUnsupported);
        return r;
    }
    stage(r, "freeness", [&] {
        auto cert = saito_freeness(*m);
        if (cert || m->graded)
            r.free = cert.has_value();
        else
            r.flags.push_back("freeness undetermined");
        if (cert) {
            r.saito_det = cert->det.to_string();
            r.saito_unit = cert->unit.to_string();
        }
    });
    if (!m->graded)
        r.flags.push_back("not graded");

    std::optional<InitialLieData> data;
    if (!stage(r, "initial Lie algebra", [&] { data = initial_lie_algebra(*m); }))
        return r;
    r.initial_dim = data->lie.dim();
    r.solvable = is_solvable(data->lie);
    r.nilpotent = is_nilpotent(data->lie);
    r.kernel_dim = data->kernel_dim;
    stage(r, "radical", [&] { r.radical_dim = radical(data->lie).dim(); });

    stage(r, "reductivity", [&] {
        ReductivityRecord rec = is_reductive_singularity(data->kernel_dim, data->l0.algebra, data->l0.rep,
                                                         r.free.value_or(false), qh.has_value());
        r.reductive = rec.reductive;
        r.linear_verdict = rec.linear_verdict;
    });
    stage(r, "rank", [&] {
        RankData rd = rank_and_multihomogeneity(data->l0.algebra, data->l0.rep);
        r.rank_l0 = rd.rank;
        r.n_D = rd.n_d;
        r.s_D = rd.s_d;
    });

    stage(r, "weights", [&] {
        BoundReport b = theorem13_check(*f, *m, *data, options.limits);
        r.levi_dim = b.levi_dim;
        r.levi_rank = b.levi_rank;
        for (const auto& [w, mult] : b.diagram.entries) {
            r.weights.push_back(w);
            r.multiplicities.push_back(mult);
        }
        r.M = b.m;
        r.maximizer = b.maximizer;
        r.bound = b.holds;
        for (const auto& fl : b.flags)
            r.flags.push_back(fl);
    });

    if (options.jet)
        stage(r, "jet", [&] { r.jet_dim = jet_truncation(*m, *options.jet).dim(); });
    return r;
}

std::vector<std::string> report_inconsistencies(const AnalysisReport& r, std::size_t n)
{
    std::vector<std::string> out;
    if (r.initial_dim && r.levi_dim && r.radical_dim && *r.initial_dim != *r.levi_dim + *r.radical_dim)
        out.push_back("initial_dim != levi_dim + radical_dim");
    if (r.rank_l0 && r.n_D && r.s_D && *r.s_D + *r.n_D != *r.rank_l0)
        out.push_back("s_D != rank_l0 - n_D");
    if (!r.weights.empty()) {
        std::size_t total = 0;
        for (auto m : r.multiplicities)
            total += m;
        if (total != n)
            out.push_back("weight multiplicities do not sum to n");
    }
    if (r.bound && r.M && r.sing_dim) {
        bool holds = *r.sing_dim && **r.sing_dim >= static_cast<int>(*r.M);
        if ((*r.bound == "holds") != holds)
            out.push_back("bound verdict disagrees with sing_dim and M");
    }
    return out;
}

std::string emit_report(const AnalysisReport& r, Format format)
{
    auto dim_json = [](const std::optional<Dimension>& d) -> json {
        if (!d)
            return nullptr;
        return *d ? json(**d) : json("-infinity");
    };
    auto m_json = [&]() -> json {
        if (r.M)
            return *r.M;
        return r.bound ? json("-infinity") : json(nullptr);
    };
    if (format == Format::Json) {
        json j;
        j["schema"] = 1;
        j["order"] = opt(r.order);
        j["qh_weights"] = r.qh_weights ? rational_list(*r.qh_weights) : json(nullptr);
        j["product_test"] = opt(r.product_test);
        j["free"] = opt(r.free);
        j["saito"] = r.saito_det ? json{{"det", *r.saito_det}, {"unit", *r.saito_unit}} : json(nullptr);
        j["initial_dim"] = opt(r.initial_dim);
        j["solvable"] = opt(r.solvable);
        j["nilpotent"] = opt(r.nilpotent);
        j["levi_dim"] = opt(r.levi_dim);
        j["levi_rank"] = opt(r.levi_rank);
        j["radical_dim"] = opt(r.radical_dim);
        j["kernel_dim"] = opt(r.kernel_dim);
        j["reductive"] = opt(r.reductive);
        j["linear_verdict"] = opt(r.linear_verdict);
        j["rank_l0"] = opt(r.rank_l0);
        j["n_D"] = opt(r.n_D);
        j["s_D"] = opt(r.s_D);
        j["weights"] = json::array();
        for (const auto& w : r.weights)
            j["weights"].push_back(rational_list(w));
        j["multiplicities"] = r.multiplicities;
        j["M"] = m_json();
        j["maximizer"] = json::array();
        for (const auto& w : r.maximizer)
            j["maximizer"].push_back(rational_list(w));
        j["sing_dim"] = dim_json(r.sing_dim);
        j["bound"] = opt(r.bound);
        j["jet_dim"] = opt(r.jet_dim);
        j["flags"] = r.flags;
        j["errors"] = r.errors;
        j["exit_code"] = r.exit_code;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    auto line = [&](const std::string& key, const std::string& value) {
        out << std::left << std::setw(16) << (key + ":") << value << "\n";
    };
    auto show = [](const auto& v) -> std::string {
        if (!v)
            return "-";
        using T = std::decay_t<decltype(*v)>;
        if constexpr (std::is_same_v<T, bool>)
            return *v ? "yes" : "no";
        else if constexpr (std::is_same_v<T, std::string>)
            return *v;
        else
            return std::to_string(*v);
    };
    line("order", show(r.order));
    if (r.qh_weights) {
        std::vector<std::string> ws;
        for (const auto& w : *r.qh_weights)
            ws.push_back(to_string(w));
        line("qh weights", "(" + join(ws, ", ") + ")");
    } else {
        line("qh weights", "none");
    }
    line("product test", show(r.product_test));
    line("free", show(r.free));
    if (r.saito_det)
        line("saito det", *r.saito_det + " = (" + *r.saito_unit + ") * f");
    line("initial dim", show(r.initial_dim));
    line("solvable", show(r.solvable));
    line("nilpotent", show(r.nilpotent));
    line("levi dim", show(r.levi_dim));
    line("levi rank", show(r.levi_rank));
    line("radical dim", show(r.radical_dim));
    line("kernel dim", show(r.kernel_dim));
    line("reductive", show(r.reductive));
    line("linear", show(r.linear_verdict));
    line("rank l0", show(r.rank_l0));
    line("n_D", show(r.n_D));
    line("s_D", show(r.s_D));
    std::vector<std::string> ws;
    for (std::size_t i = 0; i < r.weights.size(); ++i)
        ws.push_back(weight_to_string(r.weights[i]) + "x" + std::to_string(r.multiplicities[i]));
    line("weights", ws.empty() ? "-" : join(ws, " "));
    auto scalar = [](const json& v) -> std::string {
        if (v.is_null())
            return "-";
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    line("M", scalar(m_json()));
    std::vector<std::string> mx;
    for (const auto& w : r.maximizer)
        mx.push_back(weight_to_string(w));
    line("maximizer", mx.empty() ? "-" : join(mx, " "));
    line("sing dim", scalar(dim_json(r.sing_dim)));
    line("bound", show(r.bound));
    if (r.jet_dim)
        line("jet dim", std::to_string(*r.jet_dim));
    for (const auto& f : r.flags)
        line("flag", f);
    for (const auto& e : r.errors)
        line("error", e);
    return out.str();
}

AnalysisReport report_from_json(const std::string& text)
{
    json j = json::parse(text);
    if (j.value("schema", 0) != 1)
        throw InputError("unsupported report schema");
    AnalysisReport r;
    r.order = opt_from<unsigned>(j, "order");
    if (!j.at("qh_weights").is_null())
        r.qh_weights = rationals_from(j.at("qh_weights"));
    r.product_test = opt_from<bool>(j, "product_test");
    r.free = opt_from<bool>(j, "free");
    if (!j.at("saito").is_null()) {
        r.saito_det = j.at("saito").at("det").get<std::string>();
        r.saito_unit = j.at("saito").at("unit").get<std::string>();
    }
    r.initial_dim = opt_from<std::size_t>(j, "initial_dim");
    r.solvable = opt_from<bool>(j, "solvable");
    r.nilpotent = opt_from<bool>(j, "nilpotent");
    r.levi_dim = opt_from<std::size_t>(j, "levi_dim");
    r.levi_rank = opt_from<std::size_t>(j, "levi_rank");
    r.radical_dim = opt_from<std::size_t>(j, "radical_dim");
    r.kernel_dim = opt_from<std::size_t>(j, "kernel_dim");
    r.reductive = opt_from<bool>(j, "reductive");
    r.linear_verdict = opt_from<std::string>(j, "linear_verdict");
    r.rank_l0 = opt_from<std::size_t>(j, "rank_l0");
    r.n_D = opt_from<std::size_t>(j, "n_D");
    r.s_D = opt_from<std::size_t>(j, "s_D");
    for (const auto& w : j.at("weights"))
        r.weights.push_back(rationals_from(w));
    r.multiplicities = j.at("multiplicities").get<std::vector<std::size_t>>();
    if (j.at("M").is_number())
        r.M = j.at("M").get<std::size_t>();
    for (const auto& w : j.at("maximizer"))
        r.maximizer.push_back(rationals_from(w));
    const json& sd = j.at("sing_dim");
    if (sd.is_number())
        r.sing_dim = Dimension(sd.get<int>());
    else if (sd.is_string())
        r.sing_dim = Dimension(std::nullopt);
    r.bound = opt_from<std::string>(j, "bound");
    r.jet_dim = opt_from<std::size_t>(j, "jet_dim");
    r.flags = j.at("flags").get<std::vector<std::string>>();
    r.errors = j.at("errors").get<std::vector<std::string>>();
    r.exit_code = j.at("exit_code").get<int>();
    return r;
}

FreeResult run_free(const InputSpec& input)
{
    FreeResult out;
    if (input.basis.empty()) {
        out.exit_code = kInputError;
        out.message = "no basis given";
        return out;
    }
    try {
        RingPtr ring = make_ring(input.vars);
        Polynomial f = parse_polynomial(input.f, ring);
        out.check = saito_check(f, parse_basis(input, ring));
    } catch (const std::invalid_argument& e) {
        out.exit_code = kInputError;
        out.message = e.what();
        return out;
    } catch (const std::runtime_error& e) {
        out.exit_code = kInputError;
        out.message = e.what();
        return out;
    }
    if (out.check.ok) {
        out.message = "free: det = " + out.check.det->to_string() + " = (" + out.check.unit->to_string() + ") * f";
    } else {
        out.exit_code = kInputError;
        out.message = "not free: " + out.check.reason;
        if (out.check.det)
            out.message += "; det = " + out.check.det->to_string();
    }
    return out;
}

int run_corpus(const std::vector<CorpusEntry>& entries, const std::string& filter, std::ostream& out)
{
    int code = kOk;
    out << std::left << std::setw(14) << "entry" << std::setw(6) << "ord" << std::setw(6) << "dim" << std::setw(6)
        << "levi" << std::setw(7) << "free" << std::setw(10) << "reductive" << std::setw(6) << "M" << std::setw(6)
        << "sing" << std::setw(9) << "bound"
        << "result\n";
    for (const auto& e : entries) {
        if (e.name.find(filter) == std::string::npos)
            continue;
        AnalysisReport r = run_analyze(e.input);
        std::vector<std::string> bad = e.expect(r);
        for (const auto& x : report_inconsistencies(r, e.input.vars.size()))
            bad.push_back(x);
        auto cell = [](const auto& v) -> std::string {
            if (!v)
                return "-";
            using T = std::decay_t<decltype(*v)>;
            if constexpr (std::is_same_v<T, bool>)
                return *v ? "yes" : "no";
            else
                return std::to_string(*v);
        };
        std::string m = r.M ? std::to_string(*r.M) : (r.bound ? "-inf" : "-");
        std::string sing = !r.sing_dim ? "-" : (*r.sing_dim ? std::to_string(**r.sing_dim) : "-inf");
        out << std::setw(14) << e.name << std::setw(6) << cell(r.order) << std::setw(6) << cell(r.initial_dim)
            << std::setw(6) << cell(r.levi_dim) << std::setw(7) << cell(r.free) << std::setw(10) << cell(r.reductive)
            << std::setw(6) << m << std::setw(6) << sing << std::setw(9) << r.bound.value_or("-")
            << (bad.empty() ? "ok" : "MISMATCH") << "\n";
        for (const auto& b : bad)
            out << "  " << e.name << ": " << b << "\n";
        if (!bad.empty())
            code = 1;
    }
    return code;
}

namespace {

using Checks = std::vector<std::string>;

struct Expect {
    const AnalysisReport& r;
    Checks bad;

    template <class T, class U>
    Expect& eq(const char* what, const std::optional<T>& got, const U& want)
    {
        if (!got || !(*got == want)) {
            std::ostringstream s;
            s << what << " expected " << want;
            bad.push_back(s.str());
        }
        return *this;
    }
    Expect& that(const char* what, bool ok)
    {
        if (!ok)
            bad.push_back(what);
        return *this;
    }
};

InputSpec spec(std::vector<std::string> vars, std::string f)
{
    InputSpec s;
    s.vars = std::move(vars);
    s.f = std::move(f);
    return s;
}

std::vector<std::string> names(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back("x" + std::to_string(i));
    return out;
}

} // namespace

const std::vector<CorpusEntry>& builtin_corpus()
{
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> c;
        c.push_back({"quartic",
                     spec({"x", "y", "z", "w"}, "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*w^2*x^2"),
                     [](const AnalysisReport& r) {
                         Expect e{r, {}};
                         e.eq("order", r.order, 4u).eq("free", r.free, true).eq("initial_dim", r.initial_dim, 4u);
                         e.eq("radical_dim", r.radical_dim, 1u).eq("levi_dim", r.levi_dim, 3u);
                         e.eq("levi_rank", r.levi_rank, 1u).eq("kernel_dim", r.kernel_dim, 0u);
                         e.eq("reductive", r.reductive, true).eq("linear_verdict", r.linear_verdict, "linear");
                         e.eq("M", r.M, 1u).eq("bound", r.bound, "holds");
                         e.that("sing_dim expected 2", r.sing_dim && *r.sing_dim == 2);
                         std::vector<Weight> w{{Rational(-3)}, {Rational(-1)}, {Rational(1)}, {Rational(3)}};
                         e.that("weights expected -3 -1 1 3", r.weights == w);
                         e.that("multiplicities expected 1 1 1 1", r.multiplicities == std::vector<std::size_t>(4, 1));
                         return e.bad;
                     }});
        for (std::size_t n = 2; n <= 4; ++n) {
            std::vector<std::string> vs = names(n);
            c.push_back({"normal" + std::to_string(n), spec(vs, join(vs, "*")), [n](const AnalysisReport& r) {
                             Expect e{r, {}};
                             e.eq("initial_dim", r.initial_dim, n).eq("free", r.free, true);
                             e.eq("reductive", r.reductive, true).eq("solvable", r.solvable, true);
                             e.eq("levi_dim", r.levi_dim, 0u).eq("bound", r.bound, "vacuous");
                             e.that("M expected -infinity", !r.M);
                             e.eq("order", r.order, static_cast<unsigned>(n));
                             return e.bad;
                         }});
        }
        for (std::size_t n = 3; n <= 4; ++n) {
            std::vector<std::string> vs = names(n), sq;
            for (const auto& v : vs)
                sq.push_back(v + "^2");
            c.push_back({"quadric" + std::to_string(n), spec(vs, join(sq, " + ")), [n](const AnalysisReport& r) {
                             Expect e{r, {}};
                             e.eq("initial_dim", r.initial_dim, 1 + n * (n - 1) / 2);
                             e.eq("solvable", r.solvable, false).eq("order", r.order, 2u);
                             e.eq("bound", r.bound, "vacuous");
                             e.that("sing_dim expected 0", r.sing_dim && *r.sing_dim == 0);
                             return e.bad;
                         }});
        }
        const std::vector<std::pair<std::string, CorpusEntry>> isolated = {
            {"x3y4", {"x3y4", spec({"x", "y"}, "x^3 + y^4"), {}}},
            {"x3y3z3", {"x3y3z3", spec({"x", "y", "z"}, "x^3 + y^3 + z^3"), {}}},
            {"x4y4z4", {"x4y4z4", spec({"x", "y", "z"}, "x^4 + y^4 + z^4"), {}}},
            {"x3y5", {"x3y5", spec({"x", "y"}, "x^3 + y^5"), {}}},
        };
        for (auto [name, entry] : isolated) {
            entry.expect = [](const AnalysisReport& r) {
                Expect e{r, {}};
                e.eq("solvable", r.solvable, true).eq("bound", r.bound, "vacuous");
                e.that("order expected >= 3", r.order && *r.order >= 3);
                e.that("sing_dim expected 0", r.sing_dim && *r.sing_dim == 0);
                return e.bad;
            };
            c.push_back(entry);
        }
        c.push_back({"smooth", spec({"x", "y"}, "x"), [](const AnalysisReport& r) {
                         Expect e{r, {}};
                         e.eq("product_test", r.product_test, false);
                         e.that("exit code expected 2", r.exit_code == kUnsupported);
                         return e.bad;
                     }});
        return c;
    }();
    return corpus;
}

} // namespace loglie
