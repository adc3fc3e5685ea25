#include "tasks.hpp"

#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include "hacoh/five_term.hpp"

namespace hacoh::cli {

namespace {

bool budget_error(const Error& e) {
    return e.code() == ErrorCode::SearchBudgetExceeded || e.code() == ErrorCode::EnumerationInfeasible;
}

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

struct Collector {
    json verdicts = json::array();
    json checks = json::array();
    json groups = json::array();
    json maps = json::array();
    json records = json::array();
    json extra = json::object();
    bool failed = false, exhausted = false;

    void add(json& list, const std::string& name, Verdict v, const std::string& detail = {}) {
        list.push_back({{"name", name}, {"verdict", std::string(to_string(v))}, {"detail", detail}});
        failed = failed || v == Verdict::Fail;
        exhausted = exhausted || v == Verdict::Unknown;
    }
    void verdict(const std::string& name, Verdict v, const std::string& detail = {}) { add(verdicts, name, v, detail); }
    void check(const std::string& name, Verdict v, const std::string& detail = {}) { add(checks, name, v, detail); }

    void record(const std::string& verdict, const std::string& kind, json items, json data = json::object(),
                const std::string& note = {}) {
        records.push_back({{"verdict", verdict}, {"kind", kind}, {"items", std::move(items)}, {"data", std::move(data)}, {"note", note}});
    }

    void add_report(const std::string& prefix, const CheckReport& r) {
        for (const auto& item : r.items) {
            std::string detail = item.detail;
            if (!item.passed && !item.witness.empty()) {
                detail += detail.empty() ? "at (" : " at (";
                for (std::size_t i = 0; i < item.witness.size(); ++i) detail += (i ? ", " : "") + std::to_string(item.witness[i]);
                detail += ")";
            }
            verdict(prefix + item.name, verdict_of(item.passed), detail);
        }
    }
};

Outcome finish(const std::string& task, const json& problem, Collector c) {
    Outcome out;
    const std::string status = c.failed ? "fail" : c.exhausted ? "budget" : "pass";
    out.exit_code = c.failed ? kFail : c.exhausted ? kBudget : kPass;
    out.report = c.extra;
    out.report["schema"] = io::kSchemaVersion;
    out.report["task"] = task;
    out.report["problem"] = problem;
    out.report["status"] = status;
    out.report["verdicts"] = std::move(c.verdicts);
    if (!c.checks.empty()) out.report["checks"] = std::move(c.checks);
    if (!c.groups.empty()) out.report["groups"] = std::move(c.groups);
    if (!c.maps.empty()) out.report["maps"] = std::move(c.maps);
    out.report["witnesses"] = {{"file", "witnesses.json"}, {"count", c.records.size()}};
    out.witnesses = {{"schema", io::kSchemaVersion}, {"task", task}, {"records", std::move(c.records)}};
    out.text = render_text(out.report);
    return out;
}

json describe_hopf(const HopfData& h) {
    std::size_t grouplike = 0;
    for (bool g : h.group_like()) grouplike += g;
    return {{"name", h.name()},         {"dim", h.dim()},
            {"labels", h.labels()},     {"group_like", grouplike},
            {"commutative", h.is_commutative()}, {"cocommutative", h.is_cocommutative()},
            {"antipode", h.has_antipode()}};
}

json group_json(const std::string& name, const std::optional<FiniteAbelianGroup>& g, const std::string& method,
                const std::vector<RegElement>& generators, const io::SlotNames& names) {
    json gens = json::array();
    for (const auto& r : generators) gens.push_back(io::to_json(r, names));
    return {{"name", name}, {"group", g ? io::to_json(*g) : json(nullptr)}, {"method", method}, {"generators", std::move(gens)}};
}

// ---------------------------------------------------------------------------
// check and smash

HopfData::Ptr source_hopf(const Problem& p) {
    if (p.task == "check") {
        const Object& o = p.param_object("object");
        require(o.hopf != nullptr, ErrorCode::ValidationError, "isomorphism checks need a Hopf algebra object");
        return o.hopf;
    }
    return smash_product(p.hopf("n"), p.hopf("t"), p.action("action")).h;
}

void isomorphism(const Problem& p, Collector& c, const HopfData::Ptr& a, const std::string& key) {
    const std::string target = p.params.at(key).get<std::string>();
    const auto b = p.hopf(key);
    const auto perm = find_basis_isomorphism(*a, *b);
    c.verdict("isomorphic_to_" + target, verdict_of(perm.has_value()),
              perm ? "basis bijection found" : "no basis permutation carries the structure tensors across");
    if (perm) c.record("isomorphic_to_" + target, "isomorphism", json::object(), {{"target", target}, {"permutation", *perm}});
}

void task_check(const Problem& p, Collector& c) {
    const Object& o = p.param_object("object");
    if (o.kind == "group") {
        c.verdict("group_axioms", Verdict::Pass, "order " + std::to_string(o.group->order()) + ", table validated on load");
        c.extra["object"] = {{"kind", o.kind}, {"order", o.group->order()}, {"abelian", o.group->is_abelian()}};
    }
    if (o.hopf) {
        c.add_report("", verify_hopf(*o.hopf));
        c.extra["object"] = describe_hopf(*o.hopf);
    }
    if (o.algebra) {
        c.add_report("", verify_algebra(*o.algebra));
        c.extra["object"] = {{"name", o.algebra->name()}, {"dim", o.algebra->dim()}, {"commutative", o.algebra->is_commutative()}};
    }
    if (o.action) c.add_report("action.", verify_action(*o.action));
    if (o.smash) c.add_report("action.", verify_action(o.smash->action));
    if (p.params.contains("isomorphic_to")) isomorphism(p, c, source_hopf(p), "isomorphic_to");
}

void task_smash(const Problem& p, Collector& c) {
    const auto n = p.hopf("n"), t = p.hopf("t");
    const ActionData& act = p.action("action");
    const auto av = verify_action(act);
    c.add_report("action.", av);
    if (!av.ok()) return;
    const SmashData s = smash_product(n, t, act);
    c.add_report("smash.", verify_hopf(*s.h));
    c.extra["smash"] = describe_hopf(*s.h);
    if (act.is_trivial()) {
        const auto tensor = tensor_hopf(*n, *t);
        const auto& x = s.h->tables();
        const auto& y = tensor->tables();
        const bool same = x.mult == y.mult && x.unit == y.unit && x.comult == y.comult && x.counit == y.counit;
        c.verdict("equals_tensor", verdict_of(same), same ? "identical structure tensors" : "structure tensors differ");
    }
    if (p.params.contains("compare")) isomorphism(p, c, s.h, "compare");
}

// ---------------------------------------------------------------------------
// cohom

struct CohomContext {
    std::unique_ptr<MeasuringComplex> mc;
    CochainComplex::Ptr sweedler;
    io::SlotNames names;
    AlgebraData::Ptr coeff;

    const CochainComplex& complex() const { return mc ? mc->complex() : *sweedler; }
    bool measuring() const { return mc != nullptr; }
};

CohomContext cohom_context(const Problem& p, bool measuring) {
    CohomContext ctx;
    ctx.coeff = p.coeff();
    require(!measuring || p.params.contains("t"), ErrorCode::ValidationError,
            "task cohom --measuring: give \"t\", \"n\" and \"action\"");
    if (p.params.contains("t")) {
        const auto t = p.hopf("t"), n = p.hopf("n");
        ctx.mc = std::make_unique<MeasuringComplex>(t, n, p.action("action"), ctx.coeff);
        ctx.names = {{'T', t}, {'N', n}};
    } else {
        require(p.params.contains("object"), ErrorCode::ValidationError,
                "task cohom: give \"object\", or \"t\", \"n\" and \"action\" for measuring cohomology");
        const auto h = p.hopf("object");
        ctx.sweedler = CochainComplex::sweedler(h, ctx.coeff);
        ctx.names = {{'H', h}};
    }
    return ctx;
}

std::string cocycle_failure(const CohomContext& ctx, const RegElement& z) {
    if (ctx.measuring()) {
        const auto m = ctx.mc->is_measuring(z);
        if (!m.ok) return "violates the " + m.law + " law";
    }
    const auto cc = is_cocycle(ctx.complex(), z);
    if (!cc.ok) return "cocycle identity fails";
    return {};
}

void task_cohom(const Problem& p, const Flags& f, Collector& c) {
    const auto q = f.degree ? *f.degree : p.params.at("degree").get<std::size_t>();
    const std::string method = !f.method.empty() ? f.method : p.params.value("method", std::string{});
    require(method.empty() || method == "bruteforce" || method == "bridge", ErrorCode::ValidationError,
            "method must be bruteforce or bridge");
    const CohomContext ctx = cohom_context(p, f.measuring);
    require(q >= 1 && q <= (ctx.measuring() ? 2u : 3u), ErrorCode::ValidationError,
            "degree " + std::to_string(q) + " is outside the supported range");
    const SearchOptions opt{p.budget};

    const bool group_algebra_case = ctx.measuring() ? ctx.mc->t()->all_group_like() : ctx.sweedler->active().all_group_like();
    auto compute = [&](const std::string& m) -> CohomologyResult {
        if (ctx.measuring()) return m == "bridge" ? KgSpecialization(*ctx.mc, opt).cohomology(q) : ctx.mc->cohomology(q, opt);
        return m == "bridge" ? sweedler_cohomology_via_bridge(*ctx.sweedler, q) : cohomology_bruteforce(*ctx.sweedler, q, opt);
    };

    const std::string name = "h" + std::to_string(q) + (ctx.measuring() ? "_meas" : "");
    CohomologyResult r;
    try {
        r = compute(method.empty() ? "bruteforce" : method);
    } catch (const Error& e) {
        if (!budget_error(e)) throw;
        c.groups.push_back(group_json(name, std::nullopt, "budget exceeded", {}, ctx.names));
        c.verdict("cohomology", Verdict::Unknown, e.what());
        return;
    }
    c.groups.push_back(group_json(name, r.group, r.method, r.representatives, ctx.names));

    std::string bad;
    for (std::size_t i = 0; i < r.representatives.size(); ++i) {
        const auto& z = r.representatives[i];
        if (auto why = cocycle_failure(ctx, z); !why.empty() && bad.empty()) bad = "generator " + std::to_string(i) + " " + why;
        c.record("representatives_are_cocycles", "cocycle", {{"z", io::to_json(z, ctx.names)}}, {{"degree", q}});
    }
    c.verdict("representatives_are_cocycles", verdict_of(bad.empty()),
              bad.empty() ? std::to_string(r.representatives.size()) + (r.representatives.size() == 1 ? " generator" : " generators") : bad);

    if (method.empty() && group_algebra_case && ctx.coeff->k().is_finite()) {
        try {
            const auto other = compute("bridge");
            const bool same = other.group == r.group;
            c.verdict("agrees_with_bridge", verdict_of(same), r.group.to_string() + " vs " + other.group.to_string());
        } catch (const Error& e) {
            if (!budget_error(e)) throw;
            c.verdict("agrees_with_bridge", Verdict::Unknown, e.what());
        }
    }
}

// ---------------------------------------------------------------------------
// sequence

SmashData task_smash_data(const Problem& p) {
    if (p.params.contains("smash")) {
        const Object& o = p.param_object("smash");
        require(o.smash.has_value(), ErrorCode::ValidationError, "task sequence: \"smash\" must name a smash product");
        return *o.smash;
    }
    require(p.params.contains("n") && p.params.contains("t") && p.params.contains("action"), ErrorCode::ValidationError,
            "task sequence: give \"smash\", or \"n\", \"t\" and \"action\"");
    return smash_product(p.hopf("n"), p.hopf("t"), p.action("action"));
}

io::SlotNames sequence_names(const SequenceSetup& s) {
    return {{'N', s.smash().n}, {'T', s.smash().t}, {'H', s.smash().h}};
}

void task_sequence(const Problem& p, Collector& c) {
    const SequenceSetup s(task_smash_data(p), p.coeff());
    const auto names = sequence_names(s);
    const auto r = verify_sequence(s, SearchOptions{p.budget});
    c.extra["sequence"] = {{"n", r.n}, {"t", r.t}, {"action", r.action}, {"coeff", r.coeff}};
    for (const auto& g : r.groups) {
        json e = group_json(g.name, g.group, g.method, g.generators, names);
        e["cocycles"] = g.cocycles;
        e["coboundaries"] = g.coboundaries;
        c.groups.push_back(std::move(e));
    }
    for (const auto& m : r.maps) {
        json images = json::array();
        for (const auto& x : m.images) images.push_back(io::to_json(x, names));
        c.maps.push_back({{"name", m.name},
                          {"source", m.source},
                          {"target", m.target},
                          {"matrix", m.hom ? json(m.hom->matrix) : json(nullptr)},
                          {"images", std::move(images)}});
    }
    auto emit = [&](const ExactnessVerdict& v, bool is_check) {
        if (is_check)
            c.check(v.name, v.verdict, v.detail);
        else
            c.verdict(v.name, v.verdict, v.detail);
        for (const auto& w : v.witnesses) {
            json items = json::object();
            for (const auto& [k, x] : w.items) items[k] = io::to_json(x, names);
            c.record(v.name, w.kind, std::move(items), json::object(), w.note);
        }
    };
    for (const auto& v : r.verdicts) emit(v, false);
    for (const auto& v : r.checks) emit(v, true);
}

// ---------------------------------------------------------------------------
// oracle: seeded property suites

std::optional<RegElement> random_invertible(const CochainComplex& cc, std::size_t q, std::mt19937_64& rng) {
    const CochainGrid grid = cc.grid(q, false);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RegElement f = grid.random(rng);
        if (try_conv_inverse(f)) return f;
    }
    return std::nullopt;
}

std::string delta_delta_failure(const CochainComplex& cc, const RegElement& f) {
    return cc.differential(cc.differential(f)).is_unit() ? "" : "delta delta f is not the unit";
}

std::string inverse_failure(const RegElement& f, const RegElement& g) {
    if (!convolve(f, g).is_unit() || !convolve(g, f).is_unit()) return "f * g is not the unit";
    if (!(conv_inverse(g) == f)) return "the inverse of g is not f";
    return {};
}

std::string dictionary_failure(const CochainComplex& cc, const UnitDictionary& d, const RegElement& f) {
    return d.to_cochain(cc.differential(f)) == bar_differential(d.module(), d.to_cochain(f)) ? ""
                                                                                              : "the dictionary does not commute with delta";
}

void task_oracle(const Problem& p, Collector& c) {
    const auto h = p.hopf("object");
    const auto a = p.coeff();
    const auto samples = p.params.value("samples", std::int64_t{100});
    require(samples > 0, ErrorCode::ValidationError, "task oracle: \"samples\" must be positive");
    const auto cc = CochainComplex::sweedler(h, a);
    const io::SlotNames names = {{'H', h}};
    std::mt19937_64 rng(p.seed);

    std::vector<RegElement> pool;
    for (std::int64_t i = 0; i < samples; ++i)
        if (auto f = random_invertible(*cc, static_cast<std::size_t>(i % 3), rng)) pool.push_back(std::move(*f));
    c.extra["oracle"] = {{"seed", p.seed}, {"samples", samples}, {"drawn", pool.size()}};

    std::string bad;
    for (const auto& f : pool) {
        if (auto why = delta_delta_failure(*cc, f); !why.empty() && bad.empty()) bad = why;
        c.record("delta_delta", "delta_delta", {{"f", io::to_json(f, names)}});
    }
    c.verdict("delta_delta", verdict_of(bad.empty() && !pool.empty()), std::to_string(pool.size()) + " cochains" + (bad.empty() ? "" : ": " + bad));

    bad.clear();
    for (const auto& f : pool) {
        const RegElement g = conv_inverse(f);
        if (auto why = inverse_failure(f, g); !why.empty() && bad.empty()) bad = why;
        c.record("conv_inverse", "conv_inverse", {{"f", io::to_json(f, names)}, {"g", io::to_json(g, names)}});
    }
    c.verdict("conv_inverse", verdict_of(bad.empty()), std::to_string(pool.size()) + " round trips" + (bad.empty() ? "" : ": " + bad));

    if (h->all_group_like() && a->k().is_finite()) {
        const UnitDictionary d(h, a);
        bad.clear();
        for (const auto& f : pool) {
            if (auto why = dictionary_failure(*cc, d, f); !why.empty() && bad.empty()) bad = why;
            c.record("dictionary", "dictionary", {{"f", io::to_json(f, names)}});
        }
        c.verdict("dictionary", verdict_of(bad.empty()), std::to_string(pool.size()) + " cochains" + (bad.empty() ? "" : ": " + bad));
    }
}

// ---------------------------------------------------------------------------
// recheck

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::ValidationError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return io::parse_document(ss.str(), path);
}

class Rechecker {
public:
    explicit Rechecker(const Problem& p) : p_(p) {
        if (p.task == "sequence") {
            seq_ = std::make_unique<SequenceSetup>(task_smash_data(p), p.coeff());
            names_ = sequence_names(*seq_);
        } else if (p.task == "cohom") {
            cohom_ = std::make_unique<CohomContext>(cohom_context(p, false));
            names_ = cohom_->names;
        } else if (p.task == "oracle") {
            const auto h = p.hopf("object");
            oracle_ = CochainComplex::sweedler(h, p.coeff());
            names_ = {{'H', h}};
            if (h->all_group_like() && p.coeff()->k().is_finite()) dict_ = std::make_unique<UnitDictionary>(h, p.coeff());
        }
    }

    std::string check(const json& rec) const {
        const auto kind = rec.at("kind").get<std::string>();
        const auto& items = rec.at("items");
        auto reg = [&](const std::string& key, const AlgebraData::Ptr& coeff) {
            require(items.contains(key), ErrorCode::ValidationError, "record misses item \"" + key + "\"");
            return io::reg_from_json(items.at(key), names_, coeff);
        };
        if (kind == "isomorphism") {
            const auto target = p_.hopf(p_.task == "check" ? "isomorphic_to" : "compare");
            const auto perm = rec.at("data").at("permutation").get<std::vector<std::size_t>>();
            return is_basis_isomorphism(*source_hopf(p_), *target, perm) ? "" : "the permutation is no isomorphism";
        }
        if (seq_) {
            WitnessRecord w;
            w.kind = kind;
            w.note = rec.value("note", std::string{});
            for (const auto& [key, _] : items.items()) w.items.emplace(key, reg(key, seq_->coeff()));
            return recheck_witness(*seq_, w);
        }
        if (cohom_ && kind == "cocycle") {
            const RegElement z = reg("z", cohom_->coeff);
            if (cohom_->complex().degree(z) != rec.at("data").at("degree").get<std::size_t>()) return "wrong degree";
            return cocycle_failure(*cohom_, z);
        }
        if (oracle_) {
            const auto a = oracle_->coeff();
            if (kind == "delta_delta") return delta_delta_failure(*oracle_, reg("f", a));
            if (kind == "conv_inverse") return inverse_failure(reg("f", a), reg("g", a));
            if (kind == "dictionary" && dict_) return dictionary_failure(*oracle_, *dict_, reg("f", a));
        }
        return "unknown witness kind \"" + kind + "\" for task " + p_.task;
    }

private:
    const Problem& p_;
    std::unique_ptr<SequenceSetup> seq_;
    std::unique_ptr<CohomContext> cohom_;
    CochainComplex::Ptr oracle_;
    std::unique_ptr<UnitDictionary> dict_;
    io::SlotNames names_;
};

std::string group_display(const json& g) {
    if (g.is_null()) return "?";
    std::string s = g.at("display").get<std::string>();
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.compare(i, 2, "Z/") == 0) {
            out += "ℤ/";
            ++i;
        } else if (s.compare(i, 3, " x ") == 0) {
            out += " × ";
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

}  // namespace

Outcome run(const Problem& p, const Flags& flags) {
    if (p.task == "recheck") {
        const auto path = p.params.at("report").get<std::string>();
        return recheck_file(!path.empty() && path[0] == '/' ? path : p.directory + "/" + path);
    }
    Collector c;
    try {
        if (p.task == "check")
            task_check(p, c);
        else if (p.task == "smash")
            task_smash(p, c);
        else if (p.task == "cohom")
            task_cohom(p, flags, c);
        else if (p.task == "sequence")
            task_sequence(p, c);
        else if (p.task == "oracle")
            task_oracle(p, c);
    } catch (const Error& e) {
        if (!budget_error(e)) throw;
        c.verdict(p.task, Verdict::Unknown, e.what());
    }
    return finish(p.task, p.source, std::move(c));
}

Outcome recheck(const json& report, const json& witnesses) {
    require(report.is_object() && report.contains("problem") && report.contains("task"), ErrorCode::ValidationError,
            "not a report: missing \"problem\" or \"task\"");
    require(witnesses.is_object() && witnesses.contains("records"), ErrorCode::ValidationError, "witness file has no \"records\"");
    const Problem p = load_problem(report.at("problem"));
    const Rechecker rc(p);
    Collector c;
    const auto& records = witnesses.at("records");
    const auto expected = report.at("witnesses").at("count").get<std::size_t>();
    c.verdict("witness_count", verdict_of(records.size() == expected),
              std::to_string(records.size()) + " records, report lists " + std::to_string(expected));
    std::size_t failures = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        std::string why;
        try {
            why = rc.check(rec);
        } catch (const Error& e) {
            why = e.what();
        }
        if (!why.empty()) {
            ++failures;
            c.verdict(rec.at("verdict").get<std::string>() + "/" + rec.at("kind").get<std::string>() + "#" + std::to_string(i),
                      Verdict::Fail, why);
        }
    }
    c.verdict("witnesses", verdict_of(failures == 0),
              std::to_string(records.size() - failures) + " of " + std::to_string(records.size()) + " re-validated");
    c.extra["rechecked"] = {{"task", report.at("task")}, {"status", report.value("status", std::string{})}};
    return finish("recheck", p.source, std::move(c));
}

Outcome recheck_file(const std::string& report_path) {
    const json report = read_json_file(report_path);
    const auto slash = report_path.find_last_of('/');
    const std::string dir = slash == std::string::npos ? "." : report_path.substr(0, slash);
    require(report.contains("witnesses") && report.at("witnesses").contains("file"), ErrorCode::ValidationError,
            report_path + " does not name a witness file");
    return recheck(report, read_json_file(dir + "/" + report.at("witnesses").at("file").get<std::string>()));
}

std::string render_text(const json& report) {
    std::ostringstream os;
    os << "task: " << report.at("task").get<std::string>() << "\n";
    const auto& prob = report.at("problem");
    if (prob.contains("field")) {
        const auto spec = io::field_spec_from_json(prob.at("field"));
        os << "field: " << spec.to_string() << "\n";
    }
    if (report.contains("rechecked")) os << "rechecked: " << report.at("rechecked").at("task").get<std::string>() << " report\n";
    if (report.contains("sequence")) {
        const auto& s = report.at("sequence");
        os << "H = " << s.at("n").get<std::string>() << " # " << s.at("t").get<std::string>() << " (" << s.at("action").get<std::string>()
           << " action), A = " << s.at("coeff").get<std::string>() << "\n";
    }
    for (const char* key : {"object", "smash"})
        if (report.contains(key)) os << key << ": " << report.at(key).dump() << "\n";
    if (report.contains("oracle")) os << "oracle: " << report.at("oracle").dump() << "\n";
    if (report.contains("groups")) {
        os << "\ngroups\n";
        for (const auto& g : report.at("groups")) {
            os << "  " << g.at("name").get<std::string>() << " = " << group_display(g.at("group")) << "  [" << g.at("method").get<std::string>()
               << "]\n";
            std::size_t i = 0;
            for (const auto& r : g.at("generators"))
                os << "    generator " << i++ << " on " << r.at("space").get<std::string>() << ": " << r.at("values").dump() << "\n";
        }
    }
    if (report.contains("maps")) {
        os << "\nmaps\n";
        for (const auto& m : report.at("maps"))
            os << "  " << m.at("name").get<std::string>() << ": " << m.at("source").get<std::string>() << " -> "
               << m.at("target").get<std::string>() << "  " << (m.at("matrix").is_null() ? "?" : m.at("matrix").dump()) << "\n";
    }
    for (const char* key : {"verdicts", "checks"}) {
        if (!report.contains(key)) continue;
        os << "\n" << key << "\n";
        for (const auto& v : report.at(key)) {
            os << "  " << v.at("name").get<std::string>() << ": " << v.at("verdict").get<std::string>();
            const auto detail = v.at("detail").get<std::string>();
            if (!detail.empty()) os << "  (" << detail << ")";
            os << "\n";
        }
    }
    os << "\nwitnesses: " << report.at("witnesses").at("count").get<std::size_t>() << "\n";
    os << "status: " << report.at("status").get<std::string>() << "\n";
    return os.str();
}

}  // namespace hacoh::cli
