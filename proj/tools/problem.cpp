#include "problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hacoh::cli {

namespace {

const std::map<std::string, std::vector<std::string>> kTaskKeys = {
    {"check", {"object"}},
    {"smash", {"n", "t", "action"}},
    {"cohom", {"degree"}},
    {"sequence", {}},
    {"oracle", {"object"}},
    {"recheck", {"report"}},
};

[[noreturn]] void invalid(const std::string& what) { raise(ErrorCode::ValidationError, what); }

const json& need(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) invalid(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string need_string(const json& j, const std::string& key, const std::string& where) {
    const auto& v = need(j, key, where);
    if (!v.is_string()) invalid(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

std::int64_t need_int(const json& j, const std::string& key, const std::string& where) {
    const auto& v = need(j, key, where);
    if (!v.is_number_integer()) invalid(where + ": \"" + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

std::vector<Scalar> scalars(const Field& k, const json& j, std::size_t expected, const std::string& where) {
    if (!j.is_array() || j.size() != expected)
        invalid(where + ": expected " + std::to_string(expected) + " field elements");
    std::vector<Scalar> out;
    for (const auto& e : j) out.push_back(io::scalar_from_json(k, e));
    return out;
}

class Builder {
public:
    Builder(const json& decls, Field::Ptr k) : decls_(decls), k_(std::move(k)) {}

    std::map<std::string, Object> build() {
        for (const auto& [name, _] : decls_.items()) get(name);
        return std::move(done_);
    }

private:
    const Object& get(const std::string& name) {
        if (auto it = done_.find(name); it != done_.end()) return it->second;
        if (!decls_.contains(name)) invalid("unknown object \"" + name + "\"");
        if (!active_.insert(name).second) invalid("object \"" + name + "\" depends on itself");
        Object o = make(name, decls_.at(name));
        active_.erase(name);
        return done_.emplace(name, std::move(o)).first->second;
    }

    const Object& ref(const json& d, const std::string& key, const std::string& where) {
        return get(need_string(d, key, where));
    }

    HopfData::Ptr hopf_ref(const json& d, const std::string& key, const std::string& where) {
        const Object& o = ref(d, key, where);
        if (!o.hopf) invalid(where + ": \"" + key + "\" must name a Hopf algebra");
        return o.hopf;
    }

    FiniteGroup group_of(const json& d, const std::string& where) {
        if (d.contains("group")) {
            const auto& g = d.at("group");
            if (g.is_string()) {
                const Object& o = get(g.get<std::string>());
                if (!o.group) invalid(where + ": \"group\" must name a group");
                return *o.group;
            }
            return group_of(g, where);
        }
        if (d.contains("cyclic")) return FiniteGroup::cyclic(static_cast<std::size_t>(positive(d, "cyclic", where)));
        if (d.contains("symmetric")) {
            const auto n = positive(d, "symmetric", where);
            if (n > 5) invalid(where + ": symmetric groups are supported up to degree 5");
            return FiniteGroup::symmetric(static_cast<std::size_t>(n));
        }
        if (d.contains("product")) {
            const auto& f = d.at("product");
            if (!f.is_array() || f.empty()) invalid(where + ": \"product\" must be a non-empty list");
            FiniteGroup g = group_of(f[0].is_string() ? json{{"group", f[0]}} : f[0], where);
            for (std::size_t i = 1; i < f.size(); ++i)
                g = FiniteGroup::direct_product(g, group_of(f[i].is_string() ? json{{"group", f[i]}} : f[i], where));
            return g;
        }
        if (d.contains("table"))
            return FiniteGroup::from_table(d.at("table").get<std::vector<std::vector<std::size_t>>>(),
                                           d.value("labels", std::vector<std::string>{}));
        invalid(where + ": a group needs one of cyclic, symmetric, product, table or group");
    }

    static std::int64_t positive(const json& d, const std::string& key, const std::string& where) {
        const auto v = need_int(d, key, where);
        if (v < 1) invalid(where + ": \"" + key + "\" must be positive");
        return v;
    }

    Object make(const std::string& name, const json& d) {
        const std::string where = "object \"" + name + "\"";
        Object o;
        o.kind = need_string(d, "kind", where);
        const Field& k = *k_;
        if (o.kind == "group") {
            o.group = group_of(d, where);
        } else if (o.kind == "group_algebra") {
            o.group = group_of(d, where);
            o.hopf = group_algebra(k_, *o.group);
        } else if (o.kind == "primitive_truncated") {
            if (!k.is_finite()) invalid(where + ": needs a field of positive characteristic");
            if (d.contains("p") && need_int(d, "p", where) != k.characteristic())
                invalid(where + ": p must equal the characteristic");
            o.hopf = primitive_truncated(k.characteristic(), k_);
        } else if (o.kind == "tensor") {
            const auto& f = need(d, "factors", where);
            if (!f.is_array() || f.size() < 2) invalid(where + ": \"factors\" needs at least two names");
            HopfData::Ptr h = hopf_ref(json{{"x", f[0]}}, "x", where);
            for (std::size_t i = 1; i < f.size(); ++i) h = tensor_hopf(*h, *hopf_ref(json{{"x", f[i]}}, "x", where));
            o.hopf = h;
        } else if (o.kind == "hopf") {
            HopfData::Tables t;
            t.name = d.value("name", name);
            t.labels = need(d, "labels", where).get<std::vector<std::string>>();
            const std::size_t n = t.labels.size();
            t.mult = scalars(k, need(d, "mult", where), n * n * n, where + " mult");
            t.unit = scalars(k, need(d, "unit", where), n, where + " unit");
            t.comult = scalars(k, need(d, "comult", where), n * n * n, where + " comult");
            t.counit = scalars(k, need(d, "counit", where), n, where + " counit");
            auto h = HopfData::make(k_, std::move(t));
            if (auto s = antipode_from_bialgebra(*h)) h = h->with_antipode(std::move(*s));
            o.hopf = h;
        } else if (o.kind == "ground") {
            o.algebra = AlgebraData::ground(k_);
        } else if (o.kind == "truncated_polynomial") {
            const auto m = static_cast<std::size_t>(positive(d, "m", where));
            AlgebraData::Tables t;
            t.name = d.value("name", "k[y]/(y^" + std::to_string(m) + ")");
            for (std::size_t i = 0; i < m; ++i) t.labels.push_back("y^" + std::to_string(i));
            t.mult.assign(m * m * m, 0);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; i + j < m; ++j) t.mult[(i * m + j) * m + i + j] = 1;
            t.unit.assign(m, 0);
            t.unit[0] = 1;
            o.algebra = AlgebraData::make(k_, std::move(t));
        } else if (o.kind == "algebra") {
            AlgebraData::Tables t;
            t.name = d.value("name", name);
            t.labels = need(d, "labels", where).get<std::vector<std::string>>();
            const std::size_t n = t.labels.size();
            t.mult = scalars(k, need(d, "mult", where), n * n * n, where + " mult");
            t.unit = scalars(k, need(d, "unit", where), n, where + " unit");
            o.algebra = AlgebraData::make(k_, std::move(t));
        } else if (o.kind == "action") {
            o.action = make_action(d, where);
        } else if (o.kind == "smash") {
            const Object& a = ref(d, "action", where);
            if (!a.action) invalid(where + ": \"action\" must name an action");
            const auto n = hopf_ref(d, "n", where), t = hopf_ref(d, "t", where);
            if (a.action->actor() != t || a.action->target_hopf() != n)
                invalid(where + ": the action must be of \"t\" on \"n\"");
            o.smash = smash_product(n, t, *a.action);
            o.hopf = o.smash->h;
        } else {
            invalid(where + ": unknown kind \"" + o.kind + "\"");
        }
        return o;
    }

    ActionData make_action(const json& d, const std::string& where) {
        const Object& actor = ref(d, "actor", where);
        const Object& target = ref(d, "target", where);
        if (!actor.hopf || !target.hopf) invalid(where + ": actor and target must be Hopf algebras");
        const std::string type = need_string(d, "type", where);
        if (type == "trivial") return ActionData::trivial_left(actor.hopf, target.hopf);
        if (type == "matrix") {
            const std::size_t dt = actor.hopf->dim(), dn = target.hopf->dim();
            return ActionData::left(actor.hopf, target.hopf, scalars(*k_, need(d, "map", where), dt * dn * dn, where + " map"));
        }
        if (type == "negation") {
            if (actor.hopf->dim() != 2 || !actor.group)
                invalid(where + ": negation needs the group algebra of a group of order 2 as actor");
            const std::size_t dn = target.hopf->dim();
            const std::size_t e = actor.group->identity();
            std::vector<Scalar> map(2 * dn * dn, 0);
            for (std::size_t t = 0; t < 2; ++t)
                for (std::size_t i = 0; i < dn; ++i) map[(t * dn + i) * dn + i] = (t != e && i % 2) ? k_->neg(1) : 1;
            return ActionData::left(actor.hopf, target.hopf, map);
        }
        if (!actor.group || !target.group) invalid(where + ": \"" + type + "\" needs group algebras");
        if (type == "inversion" || type == "automorphism") {
            const auto image = type == "inversion" ? inversion_automorphism(*target.group)
                                                     : need(d, "image", where).get<std::vector<std::size_t>>();
            return ActionData::from_group_action(actor.hopf, target.hopf, GroupAction::cyclic(*actor.group, *target.group, image));
        }
        if (type == "group") {
            auto table = need(d, "table", where).get<std::vector<std::vector<std::size_t>>>();
            return ActionData::from_group_action(actor.hopf, target.hopf,
                                                 GroupAction::make(*actor.group, *target.group, std::move(table)));
        }
        invalid(where + ": unknown action type \"" + type + "\"");
    }

    const json& decls_;
    Field::Ptr k_;
    std::map<std::string, Object> done_;
    std::set<std::string> active_;
};

}  // namespace

const Object& Problem::object(const std::string& name) const {
    auto it = objects.find(name);
    if (it == objects.end()) invalid("unknown object \"" + name + "\"");
    return it->second;
}

const Object& Problem::param_object(const std::string& key) const {
    return object(need_string(params, key, "task " + task));
}

HopfData::Ptr Problem::hopf(const std::string& key) const {
    const Object& o = param_object(key);
    if (!o.hopf) invalid("task " + task + ": \"" + key + "\" must name a Hopf algebra");
    return o.hopf;
}

AlgebraData::Ptr Problem::coeff(const std::string& key) const {
    if (!params.contains(key)) return AlgebraData::ground(field);
    const Object& o = param_object(key);
    if (!o.algebra) invalid("task " + task + ": \"" + key + "\" must name an algebra");
    return o.algebra;
}

const ActionData& Problem::action(const std::string& key) const {
    const Object& o = param_object(key);
    if (!o.action) invalid("task " + task + ": \"" + key + "\" must name an action");
    return *o.action;
}

Problem load_problem(json doc, const Overrides& ov, std::string directory) {
    if (!doc.is_object()) invalid("a problem file must be a JSON object");
    if (doc.contains("schema") && doc.at("schema") != io::kSchemaVersion)
        invalid("unsupported schema version " + doc.at("schema").dump());
    doc["schema"] = io::kSchemaVersion;
    if (ov.budget) doc["budgets"]["enumeration"] = *ov.budget;
    if (ov.seed) doc["seed"] = *ov.seed;

    Problem p;
    p.directory = std::move(directory);
    p.field = Field::make(io::field_spec_from_json(need(doc, "field", "problem")));
    if (doc.contains("budgets")) {
        const auto& b = doc.at("budgets");
        for (const auto& [key, v] : b.items())
            if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) invalid("budget \"" + key + "\" must be positive");
        if (b.contains("enumeration")) p.budget = b.at("enumeration").get<std::uint64_t>();
    }
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_integer()) invalid("\"seed\" must be an integer");
        p.seed = doc.at("seed").get<std::uint64_t>();
    }
    const json objects = doc.value("objects", json::object());
    if (!objects.is_object()) invalid("\"objects\" must be an object");
    p.objects = Builder(objects, p.field).build();

    const auto& task = need(doc, "task", "problem");
    p.task = need_string(task, "name", "task");
    auto keys = kTaskKeys.find(p.task);
    if (keys == kTaskKeys.end()) invalid("unknown task \"" + p.task + "\"");
    for (const auto& key : keys->second) need(task, key, "task " + p.task);
    for (const char* key : {"object", "n", "t", "action", "coeff", "smash", "isomorphic_to", "compare"})
        if (task.contains(key)) {
            const std::string name = need_string(task, key, "task " + p.task);
            if (!p.objects.count(name)) invalid("task " + p.task + ": unknown object \"" + name + "\"");
        }
    p.params = task;
    p.source = std::move(doc);
    return p;
}

Problem read_problem(const std::string& path, const Overrides& ov) {
    std::ifstream in(path);
    if (!in) invalid("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const auto slash = path.find_last_of('/');
    return load_problem(io::parse_document(ss.str(), path), ov, slash == std::string::npos ? "." : path.substr(0, slash));
}

}  // namespace hacoh::cli
