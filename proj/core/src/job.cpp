#include "tnlb/job.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "tnlb/errors.hpp"

namespace tnlb {

namespace {

mpz_class json_to_mpz(const json& v, const char* what) {
    if (v.is_number_integer()) return mpz_class(v.get<long long>());
    if (v.is_string()) return mpz_class(v.get<std::string>());
    throw ParseError(std::string("expected an integer for ") + what);
}

std::vector<mpz_class> json_to_mpz_vec(const json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string("expected an array for ") + what);
    std::vector<mpz_class> out;
    for (const auto& x : v) out.push_back(json_to_mpz(x, what));
    return out;
}

SkewFieldElt json_to_field_elt(const json& j, size_t vars, unsigned order) {
    auto read_poly = [&](const json& part) {
        return laurent_from_json(part, order);
    };
    if (j.is_string())
        return SkewFieldElt::constant(vars, Cyclotomic::parse(j.get<std::string>(), order));
    if (!j.is_object() || !j.contains("num"))
        throw ParseError("field element needs {\"num\": [...], \"den\": [...]} or a string");
    LaurentPoly num = read_poly(j.at("num"));
    LaurentPoly den = j.contains("den")
                          ? read_poly(j.at("den"))
                          : LaurentPoly::constant(vars, Cyclotomic(1));
    if (num.nvars() != vars || den.nvars() != vars)
        throw ParseError("field element has the wrong number of variables");
    return SkewFieldElt(num, den);
}

const char* status_str(RankKind k) {
    switch (k) {
        case RankKind::torsion: return "torsion";
        case RankKind::not_fg_over_k: return "not_fg_over_K";
        case RankKind::inconsistent: return "inconsistent";
    }
    return "?";
}

}  // namespace

json laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exp"] = e;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    return terms;
}

LaurentPoly laurent_from_json(const json& j, unsigned cyc_order) {
    if (!j.is_array()) throw ParseError("polynomial must be a list of terms");
    size_t nvars = 0;
    bool first = true;
    LaurentPoly out(0);
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
            throw ParseError("polynomial term needs \"exp\" and \"coeff\"");
        std::vector<long> e = t.at("exp").get<std::vector<long>>();
        if (first) {
            nvars = e.size();
            out = LaurentPoly(nvars);
            first = false;
        }
        if (e.size() != nvars) throw ParseError("inconsistent exponent lengths");
        out.add_term(e, Cyclotomic::parse(t.at("coeff").get<std::string>(), cyc_order));
    }
    return out;
}

json polytope_to_json(const NewtonPolytope& np) {
    json v = json::array();
    for (const auto& x : np.vertices) v.push_back(x);
    return v;
}

JobSpec parse_job(const json& j) {
    if (!j.is_object()) throw ParseError("job must be a JSON object");
    JobSpec spec;
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    if (j.contains("presentation"))
        spec.presentation = j.at("presentation").get<std::string>();
    if (j.contains("dt_code"))
        spec.dt_code = j.at("dt_code").get<std::vector<long>>();
    if (spec.presentation.has_value() == spec.dt_code.has_value())
        throw ParseError("exactly one of \"presentation\" or \"dt_code\" is required");

    if (j.contains("psi")) spec.psi = json_to_mpz_vec(j.at("psi"), "psi");

    if (j.contains("sigma")) {
        const json& s = j.at("sigma");
        spec.sigma_order = s.value("order", 1u);
        if (s.contains("images"))
            spec.sigma_images = s.at("images").get<std::vector<long>>();
    }

    std::string kind = "seifert";
    if (j.contains("coefficients")) {
        const json& c = j.at("coefficients");
        kind = c.value("kind", "seifert");
        if (kind == "seifert") {
            spec.kind = CoefficientKind::seifert;
        } else if (kind == "alexander_fox") {
            spec.kind = CoefficientKind::alexander_fox;
        } else if (kind == "custom_skew") {
            spec.kind = CoefficientKind::custom_skew;
            CustomSkewSpec cs;
            cs.vars = c.value("variables", 0u);
            unsigned order = spec.sigma_order;
            if (c.contains("automorphism")) {
                const json& a = c.at("automorphism");
                auto mat = a.value("matrix", std::vector<std::vector<long>>(
                                                 cs.vars, std::vector<long>(cs.vars, 0)));
                std::vector<Cyclotomic> scalars;
                if (a.contains("scalars"))
                    for (const auto& s : a.at("scalars"))
                        scalars.push_back(Cyclotomic::parse(s.get<std::string>(), order));
                else
                    scalars.assign(cs.vars, Cyclotomic(1));
                cs.alpha = MonomialAutomorphism(mat, scalars);
            } else {
                cs.alpha = MonomialAutomorphism(cs.vars);
            }
            if (!c.contains("images"))
                throw ParseError("custom_skew coefficients need \"images\"");
            for (const auto& im : c.at("images"))
                cs.images.push_back(json_to_field_elt(im, cs.vars, order));
            if (c.contains("cyclic"))
                cs.cyclic_assertion = c.at("cyclic").get<bool>();
            spec.custom = std::move(cs);
        } else {
            throw ParseError("unknown coefficient kind '" + kind + "'");
        }
    }

    if (j.contains("mode")) {
        const json& m = j.at("mode");
        if (m.is_string() && m.get<std::string>() == "complex") {
            spec.mode = SpaceMode::complex_2d;
        } else if (m.is_object() && m.contains("manifold")) {
            spec.mode = SpaceMode::manifold;
            const json& mm = m.at("manifold");
            if (mm.is_object() && mm.contains("epsilon"))
                spec.epsilon = mm.at("epsilon").get<int>();
        } else {
            throw ParseError("mode must be \"complex\" or {\"manifold\": {...}}");
        }
    }

    if (j.contains("checks")) {
        for (const auto& c : j.at("checks")) {
            if (c.is_string() && c.get<std::string>() == "cross_validate") {
                spec.check_cross_validate = true;
            } else if (c.is_object() && c.contains("fibered")) {
                spec.fibered_chi_minus =
                    json_to_mpz(c.at("fibered").at("chi_minus"), "chi_minus");
            } else {
                throw ParseError("unknown check in \"checks\"");
            }
        }
    }
    if (j.contains("polytope")) spec.polytope = j.at("polytope").get<bool>();
    return spec;
}

JobSpec parse_job_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("job is not valid JSON: ") + e.what());
    }
    return parse_job(j);
}

namespace {

struct LoadedJob {
    GroupPresentation p;
    AbelianizationData ab;
    CohomologyClass psi;
    Character sigma;
    CoefficientConfig cfg;
};

LoadedJob load_job(const JobSpec& job) {
    LoadedJob L;
    if (job.presentation)
        L.p = parse_presentation(*job.presentation);
    else
        L.p = wirtinger_from_dt(*job.dt_code);
    L.ab = abelianize(L.p);
    if (job.psi.size() != L.ab.betti)
        throw ConfigError("psi must have length b_1 = " + std::to_string(L.ab.betti));
    L.psi.coeffs = job.psi;
    L.sigma = Character(job.sigma_order, job.sigma_images, L.ab);
    L.cfg.kind = job.kind;
    L.cfg.sigma = L.sigma;
    L.cfg.custom = job.custom;
    return L;
}

json error_report(const JobSpec& job, const std::string& kind, const std::string& msg) {
    json r;
    if (!job.name.empty()) r["name"] = job.name;
    r["error"] = kind;
    r["message"] = msg;
    return r;
}

}  // namespace

JobOutcome run_bound_job(const JobSpec& job, const RunOptions& opt) {
    JobOutcome out;
    try {
        LoadedJob L = load_job(job);

        int epsilon = 1;
        bool defaulted = false;
        if (job.mode == SpaceMode::manifold) {
            if (opt.epsilon_override)
                epsilon = *opt.epsilon_override;
            else if (job.epsilon)
                epsilon = *job.epsilon;
            else if (opt.strict)
                throw ConfigError("strict mode: epsilon is required for manifold jobs");
            else
                defaulted = true;
        }

        BoundReport rep = compute_bound(L.p, L.psi, L.cfg, job.mode, epsilon,
                                        job.check_cross_validate);

        json r;
        if (!job.name.empty()) r["name"] = job.name;
        r["status"] = status_str(rep.status);
        if (rep.status == RankKind::torsion) r["rank"] = rep.rank;
        if (rep.cyclic != Cyclicity::undecided)
            r["cyclic"] = (rep.cyclic == Cyclicity::cyclic);
        r["mode"] = (rep.mode == SpaceMode::manifold) ? "manifold" : "complex";
        r["epsilon"] = rep.epsilon;
        r["psi_divisibility"] = rep.psi_divisibility.get_str();
        if (rep.bound)
            r["bound"] = *rep.bound;
        else if (rep.status == RankKind::not_fg_over_k)
            r["bound"] = "hypothesis fails; no bound";
        else
            r["bound"] = "inconsistent input";

        if (job.check_cross_validate) {
            mpz_class div = divisibility(L.psi);
            CohomologyClass prim;
            for (const auto& c : L.psi.coeffs) prim.coeffs.push_back(c / div);
            CrossCheck cc = cross_validate(L.p, prim, L.sigma);
            json cj;
            cj["status"] = status_str(cc.status);
            cj["skew_rank"] = cc.skew_rank;
            cj["norm_sigma"] = cc.norm_sigma.get_str();
            cj["equal"] = cc.equal;
            r["cross_check"] = std::move(cj);
        }
        if (job.fibered_chi_minus)
            r["fibered_equality"] = fibered_equality_check(rep, *job.fibered_chi_minus);
        if (defaulted) {
            r["warnings"] =
                json::array({"epsilon not supplied; defaulting to 1 (pass --epsilon or "
                             "set mode.manifold.epsilon)"});
        }

        out.exit_code = (rep.status == RankKind::inconsistent) ? 2 : 0;
        out.report = std::move(r);
    } catch (const ParseError& e) {
        out.exit_code = 1;
        out.report = error_report(job, "parse", e.what());
    } catch (const ConfigError& e) {
        out.exit_code = 2;
        out.report = error_report(job, "config", e.what());
    } catch (const Error& e) {
        out.exit_code = 2;
        out.report = error_report(job, "internal", e.what());
    }
    return out;
}

JobOutcome run_alexander_job(const JobSpec& job, const RunOptions& opt) {
    JobOutcome out;
    try {
        LoadedJob L = load_job(job);
        LaurentPoly delta = delta_sigma(L.p, L.ab, L.sigma);
        mpz_class norm = alexander_fox_norm(delta, L.psi);

        json r;
        if (!job.name.empty()) r["name"] = job.name;
        r["delta"] = delta.str(default_var_names(L.ab.betti));
        r["delta_terms"] = laurent_to_json(delta);
        r["norm"] = norm.get_str();
        if (opt.polytope || job.polytope) {
            if (delta.is_zero())
                r["polytope"] = json::array();
            else
                r["polytope"] = polytope_to_json(newton_polytope(delta));
        }
        out.report = std::move(r);
    } catch (const ParseError& e) {
        out.exit_code = 1;
        out.report = error_report(job, "parse", e.what());
    } catch (const ConfigError& e) {
        out.exit_code = 2;
        out.report = error_report(job, "config", e.what());
    } catch (const Error& e) {
        out.exit_code = 2;
        out.report = error_report(job, "internal", e.what());
    }
    return out;
}

BatchResult run_batch(const std::vector<JobSpec>& jobs, const RunOptions& opt,
                      unsigned workers) {
    BatchResult result;
    result.outcomes.resize(jobs.size());
    if (jobs.empty()) return result;

    if (workers == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : hw;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));

    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            result.outcomes[i] = run_bound_job(jobs[i], opt);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    for (const auto& o : result.outcomes)
        if (o.exit_code != 0) result.exit_code = 3;
    return result;
}

std::string report_to_text(const json& report) {
    std::ostringstream out;
    for (const auto& [key, value] : report.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
    return out.str();
}

}  // namespace tnlb
