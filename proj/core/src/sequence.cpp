#include <future>
#include <set>

#include "hacoh/five_term.hpp"

namespace hacoh {

namespace {

bool budget_error(const Error& e) {
    return e.code() == ErrorCode::SearchBudgetExceeded || e.code() == ErrorCode::EnumerationInfeasible;
}

template <class F>
auto guarded(F fn) -> std::optional<decltype(fn())> {
    try {
        return fn();
    } catch (const Error& e) {
        if (!budget_error(e)) throw;
        return std::nullopt;
    }
}

RegElement on(const SlotSpace::Ptr& space, const RegElement& f) {
    require(space->same_as(f.space()), ErrorCode::ShapeMismatch, "rewrapping onto a space with other slots");
    return RegElement(space, f.coeff_ptr(), f.values());
}

// Stable classes of H^2(N, A) with every normalized witness.
struct Stable {
    std::vector<std::size_t> classes;
    std::vector<std::vector<RegElement>> witnesses;
    std::map<std::size_t, std::size_t> position;
    std::optional<ExplicitAbelianGroup> group;
};

Stable stable_classes(const SequenceSetup& s, const ClassTable& h2n, const SearchOptions& opt) {
    const auto& sc = s.sc();
    const auto gs = enumerate_grid(sc.over_t().grid(1), opt.budget, [](const RegElement& g) { return try_conv_inverse(g).has_value(); });
    std::map<std::vector<Scalar>, std::vector<std::size_t>> by_delta;
    for (std::size_t i = 0; i < gs.size(); ++i) by_delta[sc.over_t().differential(gs[i]).values()].push_back(i);

    Stable st;
    for (std::size_t c = 0; c < h2n.class_count(); ++c) {
        auto it = by_delta.find(stability_defect(sc, h2n.representative(c)).values());
        if (it == by_delta.end()) continue;
        st.position[c] = st.classes.size();
        st.classes.push_back(c);
        std::vector<RegElement> w;
        for (std::size_t i : it->second) w.push_back(gs[i]);
        st.witnesses.push_back(std::move(w));
    }
    const std::size_t m = st.classes.size();
    require(st.position.count(h2n.zero_class()) > 0, ErrorCode::NotASubgroup, "the zero class is not stable");
    std::vector<std::size_t> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            auto it = st.position.find(h2n.multiply(st.classes[a], st.classes[b]));
            require(it != st.position.end(), ErrorCode::NotASubgroup, "stable classes are not closed under products");
            table[a * m + b] = it->second;
        }
    st.group.emplace(m, st.position.at(h2n.zero_class()),
                     [table = std::move(table), m](std::size_t a, std::size_t b) { return table[a * m + b]; });
    return st;
}

GroupEntry group_entry(std::string name, const std::optional<CohomologyResult>& r) {
    GroupEntry g;
    g.name = std::move(name);
    if (!r) {
        g.method = "budget exceeded";
        return g;
    }
    g.group = r->group;
    g.method = r->method;
    g.generators = r->representatives;
    if (r->classes) {
        g.cocycles = r->classes->cocycle_count();
        g.coboundaries = r->classes->coboundary_count();
    }
    return g;
}

AbelianHom make_hom(const ExplicitAbelianGroup& src, const FiniteAbelianGroup& tgt,
                    const std::function<std::vector<std::int64_t>(std::size_t)>& image) {
    AbelianHom h{src.group(), tgt, std::vector<std::vector<std::int64_t>>(tgt.rank(), std::vector<std::int64_t>(src.group().rank(), 0))};
    const auto& gens = src.generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto col = image(gens[j]);
        for (std::size_t r = 0; r < tgt.rank(); ++r) h.matrix[r][j] = col[r];
    }
    return h;
}

std::string count_of(std::size_t n, const std::string& what) { return std::to_string(n) + " " + what; }

// Runs one verdict, turning budget exhaustion into "unknown" and other errors into "fail".
ExactnessVerdict run(const std::string& name, bool inputs_ready, const std::function<void(ExactnessVerdict&)>& body) {
    ExactnessVerdict v;
    v.name = name;
    if (!inputs_ready) {
        v.detail = "an input group ran out of budget";
        return v;
    }
    try {
        body(v);
    } catch (const Error& e) {
        v.witnesses.clear();
        v.verdict = budget_error(e) ? Verdict::Unknown : Verdict::Fail;
        v.detail = e.what();
    }
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------

const GroupEntry* SequenceReport::group(const std::string& name) const {
    for (const auto& g : groups)
        if (g.name == name) return &g;
    return nullptr;
}

const ExactnessVerdict* SequenceReport::verdict(const std::string& name) const {
    for (const auto* list : {&verdicts, &checks})
        for (const auto& v : *list)
            if (v.name == name) return &v;
    return nullptr;
}

bool SequenceReport::passed() const {
    for (const auto* list : {&verdicts, &checks})
        for (const auto& v : *list)
            if (v.verdict != Verdict::Pass) return false;
    return true;
}

bool SequenceReport::exhausted() const {
    for (const auto* list : {&verdicts, &checks})
        for (const auto& v : *list)
            if (v.verdict == Verdict::Unknown) return true;
    return false;
}

SequenceReport verify_sequence(const SequenceSetup& s, const SearchOptions& opt) {
    const auto& sc = s.sc();
    const auto& mc = s.mc();
    const auto& meas = mc.complex();
    const auto& sm = s.smash();

    SequenceReport rep;
    rep.n = sm.n->name();
    rep.t = sm.t->name();
    rep.action = sm.action.is_trivial() ? "trivial" : "nontrivial";
    rep.coeff = s.coeff()->name();
    rep.budget = opt.budget;

    auto measuring = [&mc](const RegElement& f) { return mc.is_measuring(f).ok; };
    auto fh1 = std::async(std::launch::async, [&] { return guarded([&] { return cohomology_bruteforce(meas, 1, opt, measuring); }); });
    auto fh2 = std::async(std::launch::async, [&] { return guarded([&] { return cohomology_bruteforce(meas, 2, opt, measuring); }); });
    auto fred = std::async(std::launch::async, [&] { return guarded([&] { return tilde_h2(s, opt); }); });
    const auto h1 = fh1.get();
    const auto h2m = fh2.get();
    const auto red = fred.get();
    std::optional<Stable> st;
    if (red) st = guarded([&] { return stable_classes(s, *red->on_n.classes, opt); });

    const ClassTable* t1 = h1 ? h1->classes.get() : nullptr;
    const ClassTable* tm = h2m ? h2m->classes.get() : nullptr;
    const ClassTable* tt = red ? red->tilde.classes.get() : nullptr;
    const ClassTable* tn = red ? red->on_n.classes.get() : nullptr;

    // groups
    rep.groups.push_back(group_entry("h1_meas", h1));
    rep.groups.push_back(group_entry("tilde_h2", red ? std::optional(red->tilde) : std::nullopt));
    {
        GroupEntry g;
        g.name = "stable_h2_n";
        if (st) {
            g.group = st->group->group();
            g.method = "witness_search";
            for (std::size_t p : st->group->generators()) g.generators.push_back(tn->representative(st->classes[p]));
        } else {
            g.method = "budget exceeded";
        }
        rep.groups.push_back(std::move(g));
    }
    rep.groups.push_back(group_entry("h2_meas", h2m));
    rep.groups.push_back(group_entry("h2_n", red ? std::optional(red->on_n) : std::nullopt));
    rep.groups.push_back(group_entry("h2_t", red ? std::optional(red->on_t) : std::nullopt));
    rep.groups.push_back(group_entry("h2_h", red ? std::optional(red->full) : std::nullopt));

    const RegElement unit_h2 = sc.on_h().unit(2), unit_n2 = sc.on_n().unit(2), unit_t2 = sc.on_t().unit(2);
    const RegElement unit_m1 = meas.unit(1), unit_m2 = meas.unit(2);

    // maps on generators
    auto stable_rep = [&](std::size_t p) { return StableClass{tn->representative(st->classes[p]), st->witnesses[p].front()}; };
    {
        MapEntry m{"iota", "h1_meas", "tilde_h2", std::nullopt, {}};
        if (t1 && tt)
            m.hom = make_hom(t1->explicit_group(), tt->group(), [&](std::size_t c) {
                RegElement img = iota(s, t1->representative(c));
                const auto cls = tt->class_of(img);
                require(cls.has_value(), ErrorCode::NotASubgroup, "iota left the reduced cocycles");
                m.images.push_back(std::move(img));
                return tt->coordinates(*cls);
            });
        rep.maps.push_back(std::move(m));
    }
    {
        MapEntry m{"res", "tilde_h2", "stable_h2_n", std::nullopt, {}};
        if (tt && st)
            m.hom = make_hom(tt->explicit_group(), st->group->group(), [&](std::size_t c) {
                StableClass r = res_to_stable(s, tt->representative(c));
                const std::size_t p = st->position.at(*tn->class_of(r.f));
                m.images.push_back(std::move(r.f));
                return st->group->coordinates(p);
            });
        rep.maps.push_back(std::move(m));
    }
    {
        MapEntry m{"d", "stable_h2_n", "h2_meas", std::nullopt, {}};
        if (st && tm)
            m.hom = make_hom(*st->group, tm->group(), [&](std::size_t p) {
                RegElement df = d_map(s, stable_rep(p));
                const auto cls = tm->class_of(df);
                require(cls.has_value(), ErrorCode::NotASubgroup, "d left the measuring cocycles");
                m.images.push_back(std::move(df));
                return tm->coordinates(*cls);
            });
        rep.maps.push_back(std::move(m));
    }

    // (a) iota is injective
    rep.verdicts.push_back(run("iota_injective", t1 && tt, [&](ExactnessVerdict& v) {
        std::size_t kernel = 0;
        bool ok = true;
        for (std::size_t c = 0; c < t1->class_count(); ++c) {
            const RegElement& f = t1->representative(c);
            RegElement img = iota(s, f);
            const auto cls = tt->class_of(img);
            require(cls.has_value(), ErrorCode::NotASubgroup, "iota left the reduced cocycles");
            WitnessRecord w{"iota_image", {{"f", f}, {"image", img}}, {}};
            if (*cls == tt->zero_class()) {
                ++kernel;
                const auto t = same_class_witness(*tt, img, unit_h2);
                const auto pre = same_class_witness(*t1, f, unit_m1);
                if (t && pre) {
                    w.kind = "iota_kernel";
                    w.items.emplace("t", *t);
                    w.items.emplace("v", *pre);
                } else {
                    ok = false;
                    w.note = "a nonzero class maps to zero";
                }
            } else {
                w.note = "image class nonzero among " + count_of(tt->coboundary_count(), "enumerated coboundaries");
            }
            v.witnesses.push_back(std::move(w));
        }
        v.verdict = ok && kernel == 1 ? Verdict::Pass : Verdict::Fail;
        v.detail = "kernel: " + count_of(kernel, "of") + " " + std::to_string(t1->class_count()) + " classes";
    }));

    // (b) im iota = ker res
    rep.verdicts.push_back(run("exact_at_tilde_h2", t1 && tt && tn, [&](ExactnessVerdict& v) {
        bool ok = true;
        std::set<std::size_t> image;
        for (std::size_t c = 0; c < t1->class_count(); ++c) {
            const RegElement& f = t1->representative(c);
            const RegElement img = iota_raw(s, f);
            image.insert(*tt->class_of(img));
            const bool trivial = sc.restrict_nn(img).is_unit();
            ok = ok && trivial;
            v.witnesses.push_back({"res_iota", {{"f", f}}, trivial ? "" : "res(iota(f)) is not trivial"});
        }
        std::size_t kernel = 0;
        for (std::size_t b = 0; b < tt->class_count(); ++b) {
            const RegElement& f = tt->representative(b);
            const StableClass r = res_to_stable(s, f);
            if (*tn->class_of(r.f) != tn->zero_class()) continue;
            ++kernel;
            const RegElement u = *same_class_witness(*tn, r.f, unit_n2);
            const RegElement fp = iota_preimage(s, f, u);
            const bool cocycle = mc.is_measuring(fp).ok && is_cocycle(meas, fp).ok;
            const auto t = cocycle ? same_class_witness(*tt, f, iota_raw(s, fp)) : std::nullopt;
            WitnessRecord w{"iota_preimage", {{"f", f}, {"u", u}, {"f_prime", fp}}, {}};
            if (t) {
                w.items.emplace("t", *t);
            } else {
                ok = false;
                w.note = cocycle ? "iota(f') is not cohomologous to f" : "f' is not a measuring cocycle";
            }
            v.witnesses.push_back(std::move(w));
        }
        ok = ok && kernel == image.size();
        v.verdict = ok ? Verdict::Pass : Verdict::Fail;
        v.detail = "ker res: " + count_of(kernel, "classes") + ", im iota: " + count_of(image.size(), "classes");
    }));

    // (c) im res = ker d
    rep.verdicts.push_back(run("exact_at_stable", tt && tn && tm && st.has_value(), [&](ExactnessVerdict& v) {
        bool ok = true;
        std::set<std::size_t> image, kernel;
        for (std::size_t b = 0; b < tt->class_count(); ++b) {
            const RegElement& f = tt->representative(b);
            const StableClass r = res_to_stable(s, f);
            image.insert(st->position.at(*tn->class_of(r.f)));
            const bool trivial = d_map(s, r).is_unit();
            ok = ok && trivial;
            v.witnesses.push_back({"d_res", {{"f", f}}, trivial ? "" : "d(res(f)) is not trivial"});
        }
        const auto& over = sc.over_t();
        for (std::size_t p = 0; p < st->classes.size(); ++p) {
            const StableClass sp = stable_rep(p);
            const auto vv = same_class_witness(*tm, d_map(s, sp), unit_m2);
            if (!vv) continue;
            kernel.insert(p);
            const RegElement gt = convolve(on(over.space(1), sp.g), conv_inverse(on(over.space(1), *vv)));
            const RegElement z = assemble_normalized(sc, sp.f, unit_t2, gt);
            const auto cls = tt->class_of(z);
            const bool hit = cls.has_value() && sc.restrict_nn(z) == sp.f;
            ok = ok && hit;
            v.witnesses.push_back({"res_preimage", {{"f", sp.f}, {"g", sp.g}, {"v", *vv}, {"z", z}},
                                   hit ? "" : "the assembled cocycle does not restrict to f"});
        }
        ok = ok && image == kernel;
        v.verdict = ok ? Verdict::Pass : Verdict::Fail;
        v.detail = "im res: " + count_of(image.size(), "classes") + ", ker d: " + count_of(kernel.size(), "classes");
    }));

    // (d) im d = ker j
    rep.verdicts.push_back(run("exact_at_h2_meas", tn && tm && st.has_value(), [&](ExactnessVerdict& v) {
        bool ok = true;
        std::map<std::size_t, std::size_t> image;  // class of H^2_meas -> stable position
        for (std::size_t p = 0; p < st->classes.size(); ++p) image.emplace(*tm->class_of(d_map(s, stable_rep(p))), p);
        std::size_t kernel = 0;
        for (std::size_t m = 0; m < tm->class_count(); ++m) {
            const RegElement& f = tm->representative(m);
            if (auto it = image.find(m); it != image.end()) {
                ++kernel;
                const StableClass sp = stable_rep(it->second);
                const RegElement ds = d_map(s, sp);
                const RegElement big_v = assemble_raw(sc, sp.f, unit_t2, sp.g);
                const RegElement vv = *same_class_witness(*tm, f, ds);
                const bool holds = sc.on_h().differential(big_v) == j_map(s, ds) &&
                                   sc.on_h().differential(convolve(big_v, iota_raw(s, vv))) == j_map(s, f);
                ok = ok && holds;
                v.witnesses.push_back({"j_of_image", {{"f", f}, {"fnn", sp.f}, {"g", sp.g}, {"v", vv}, {"V", big_v}},
                                       holds ? "" : "j(d(s)) differs from delta V"});
                continue;
            }
            const RegElement jf = j_map(s, f);
            auto ws = bridge_coboundary_witness(sc.on_h(), jf);
            if (!ws) ws = coboundary_search(sc.on_h(), jf, opt);
            if (!ws->found()) {
                v.witnesses.push_back({"j_nonzero", {{"f", f}, {"jf", jf}},
                                       "no 2-cochain V with j(f) = delta V (" + ws->method + ", " +
                                           std::to_string(ws->searched) + " searched)"});
                continue;
            }
            ++kernel;
            // in ker j but not reached by d: try the extraction from the witness
            const StableClass ex = extract_stable(s, *ws->witness);
            const bool stable = is_stable_witness(s, ex.f, ex.g);
            const auto back = stable ? same_class_witness(*tm, f, d_map(s, ex)) : std::nullopt;
            WitnessRecord w{"j_kernel_extracted", {{"f", f}, {"V", *ws->witness}, {"h", ex.f}, {"u", ex.g}}, {}};
            if (back) {
                w.items.emplace("v", *back);
            } else {
                ok = false;
                w.note = "a class in ker j outside im d";
            }
            v.witnesses.push_back(std::move(w));
        }
        ok = ok && kernel == image.size();
        v.verdict = ok ? Verdict::Pass : Verdict::Fail;
        v.detail = "im d: " + count_of(image.size(), "classes") + ", ker j: " + count_of(kernel, "classes");
    }));

    // further checks
    rep.checks.push_back(run("d_independent_of_witness", tn && st.has_value(), [&](ExactnessVerdict& v) {
        bool ok = true;
        for (std::size_t p = 0; p < st->classes.size(); ++p) {
            const StableClass s0 = stable_rep(p);
            const RegElement d0 = d_map(s, s0);
            const RegElement g0inv = conv_inverse(on(meas.space(1), s0.g));
            for (std::size_t i = 1; i < st->witnesses[p].size(); ++i) {
                const RegElement& g = st->witnesses[p][i];
                const RegElement w = convolve(on(meas.space(1), g), g0inv);
                const bool holds = mc.is_measuring(w).ok && d_map(s, {s0.f, g}) == convolve(d0, meas.differential(w));
                ok = ok && holds;
                v.witnesses.push_back({"d_independence", {{"f", s0.f}, {"g", g}, {"g0", s0.g}, {"w", w}},
                                       holds ? "" : "d(g) and d(g0) differ by more than delta w"});
            }
        }
        v.verdict = ok ? Verdict::Pass : Verdict::Fail;
        v.detail = count_of(v.witnesses.size(), "witness pairs");
    }));
    rep.checks.push_back(run("j_into_reduced_h3", tm != nullptr, [&](ExactnessVerdict& v) {
        bool ok = true;
        for (std::size_t m = 0; m < tm->class_count(); ++m) {
            const RegElement& f = tm->representative(m);
            const RegElement jf = j_map(s, f);
            const bool holds = sc.restrict_ttt(jf).is_unit() && sc.on_h().differential(jf).is_unit();
            ok = ok && holds;
            v.witnesses.push_back({"j_reduced", {{"f", f}}, holds ? "" : "j(f) is no 3-cocycle trivial on T"});
        }
        v.verdict = ok ? Verdict::Pass : Verdict::Fail;
    }));
    rep.checks.push_back(run("splitting", red.has_value(), [&](ExactnessVerdict& v) {
        v.verdict = red->split ? Verdict::Pass : Verdict::Fail;
        v.detail = red->split_detail;
    }));
    rep.checks.push_back(run("maps_well_defined", true, [&](ExactnessVerdict& v) {
        bool ok = true, known = true;
        for (const auto& m : rep.maps) {
            if (!m.hom) known = false;
            else ok = ok && m.hom->well_defined();
        }
        v.verdict = !ok ? Verdict::Fail : known ? Verdict::Pass : Verdict::Unknown;
    }));
    if (sm.action.is_trivial())
        rep.checks.push_back(run("trivial_action_decomposition", t1 && tt && tn && rep.maps[2].hom.has_value(), [&](ExactnessVerdict& v) {
            const bool orders = tt->class_count() == t1->class_count() * tn->class_count();
            const bool d_zero = rep.maps[2].hom->is_zero();
            v.verdict = orders && d_zero ? Verdict::Pass : Verdict::Fail;
            v.detail = "|H~^2| = " + std::to_string(tt->class_count()) + ", |H^1_meas| |H^2(N)| = " +
                       std::to_string(t1->class_count() * tn->class_count()) + (d_zero ? ", d = 0" : ", d != 0");
        }));
    return rep;
}

// ---------------------------------------------------------------------------
// Rechecking

std::string recheck_witness(const SequenceSetup& s, const WitnessRecord& w) {
    const auto& sc = s.sc();
    const auto& mc = s.mc();
    const auto& meas = mc.complex();
    auto item = [&](const std::string& name) -> const RegElement& {
        auto it = w.items.find(name);
        require(it != w.items.end(), ErrorCode::ValidationError, "witness " + w.kind + " lacks item " + name);
        return it->second;
    };
    auto measuring_cocycle = [&](const RegElement& f) { return mc.is_measuring(f).ok && is_cocycle(meas, f).ok; };
    try {
        if (w.kind == "iota_image" || w.kind == "iota_kernel") {
            const auto& f = item("f");
            if (!measuring_cocycle(f)) return "f is not a measuring cocycle";
            if (item("image") != iota_raw(s, f)) return "image differs from iota(f)";
            if (w.kind == "iota_kernel") {
                if (item("image") != sc.on_h().differential(item("t"))) return "iota(f) is not delta t";
                if (!mc.is_measuring(item("v")).ok || f != meas.differential(item("v"))) return "f is not delta v";
            }
        } else if (w.kind == "res_iota") {
            if (!sc.restrict_nn(iota_raw(s, item("f"))).is_unit()) return "res(iota(f)) is not trivial";
        } else if (w.kind == "iota_preimage") {
            const auto& f = item("f");
            if (sc.restrict_nn(f) != sc.on_n().differential(item("u"))) return "f|NN is not delta u";
            if (item("f_prime") != iota_preimage(s, f, item("u"))) return "f' differs from the repair formula";
            if (!measuring_cocycle(item("f_prime"))) return "f' is not a measuring cocycle";
            if (f != convolve(iota_raw(s, item("f_prime")), sc.on_h().differential(item("t")))) return "f is not iota(f') delta t";
        } else if (w.kind == "d_res") {
            const auto& f = item("f");
            if (!is_cocycle(sc.on_h(), f).ok) return "f is not a cocycle";
            if (!d_map(s, res_to_stable(s, f)).is_unit()) return "d(res(f)) is not trivial";
        } else if (w.kind == "res_preimage") {
            const auto& f = item("f");
            const StableClass st{f, item("g")};
            if (!mc.is_measuring(item("v")).ok || d_map(s, st) != meas.differential(item("v"))) return "d(f) is not delta v";
            const auto sp = sc.over_t().space(1);
            const RegElement gt = convolve(on(sp, st.g), conv_inverse(on(sp, item("v"))));
            const RegElement z = assemble_normalized(sc, f, sc.on_t().unit(2), gt);
            if (z != item("z")) return "z differs from the assembled cocycle";
            if (sc.restrict_nn(z) != f) return "res(z) differs from f";
        } else if (w.kind == "j_of_image") {
            const StableClass st{item("fnn"), item("g")};
            const RegElement ds = d_map(s, st);
            if (item("V") != assemble_raw(sc, st.f, sc.on_t().unit(2), st.g)) return "V differs from its formula";
            if (!mc.is_measuring(item("v")).ok || item("f") != convolve(ds, meas.differential(item("v"))))
                return "f is not d(s) delta v";
            if (sc.on_h().differential(item("V")) != j_map(s, ds)) return "j(d(s)) is not delta V";
            if (sc.on_h().differential(convolve(item("V"), iota_raw(s, item("v")))) != j_map(s, item("f")))
                return "j(f) is not delta(V v')";
        } else if (w.kind == "j_nonzero") {
            if (item("jf") != j_map(s, item("f"))) return "jf differs from j(f)";
        } else if (w.kind == "j_kernel_extracted") {
            if (sc.on_h().differential(item("V")) != j_map(s, item("f"))) return "j(f) is not delta V";
            const StableClass ex = extract_stable(s, item("V"));
            if (ex.f != item("h") || ex.g != on(ex.g.space_ptr(), item("u"))) return "extraction differs";
            if (!is_stable_witness(s, ex.f, ex.g)) return "u does not witness stability of h";
            if (item("f") != convolve(d_map(s, ex), meas.differential(item("v")))) return "f is not d(h) delta v";
        } else if (w.kind == "d_independence") {
            const auto& f = item("f");
            const RegElement g = on(meas.space(1), item("g")), g0 = on(meas.space(1), item("g0"));
            if (item("w") != convolve(g, conv_inverse(g0))) return "w differs from g g0^{-1}";
            if (!mc.is_measuring(item("w")).ok) return "w is not measuring";
            if (d_map(s, {f, item("g")}) != convolve(d_map(s, {f, item("g0")}), meas.differential(item("w"))))
                return "d(g) is not d(g0) delta w";
        } else if (w.kind == "j_reduced") {
            const RegElement jf = j_map(s, item("f"));
            if (!sc.restrict_ttt(jf).is_unit() || !sc.on_h().differential(jf).is_unit()) return "j(f) is no reduced 3-cocycle";
        } else {
            return "unknown witness kind " + w.kind;
        }
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace hacoh
