/*
   Copyright 2026 The nullcone Authors

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

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "purity.hpp"

namespace nullcone::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

enum class Status { ok, inconclusive, error };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::inconclusive: return "inconclusive";
        case Status::error: return "error";
    }
    return "error";
}

inline int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::inconclusive: return 2;
        case Status::error: return 1;
    }
    return 1;
}

/// Inclusive integer values a parameter takes: "3", "1:4" or "1,3,5".
struct Range {
    std::vector<int> values;

    static Range parse(const std::string& text) {
        Range r;
        if (text.empty()) throw InvalidArgument("empty parameter value");
        auto to_int = [&](const std::string& s) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != s.size()) throw InvalidArgument("malformed integer '" + s + "' in '" + text + "'");
            return v;
        };
        if (auto colon = text.find(':'); colon != std::string::npos) {
            int lo = to_int(text.substr(0, colon)), hi = to_int(text.substr(colon + 1));
            if (hi < lo) throw InvalidArgument("empty range '" + text + "'");
            for (int v = lo; v <= hi; ++v) r.values.push_back(v);
        } else {
            std::stringstream ss(text);
            std::string part;
            while (std::getline(ss, part, ',')) r.values.push_back(to_int(part));
        }
        return r;
    }
    bool single() const { return values.size() == 1; }
};

/// A fully described batch job. Sizes are ranges so that sweeps share the same form.
struct JobSpec {
    std::string command;
    std::optional<Group> group;
    std::optional<Range> m, n, t, d, p;
    int k_max = kDefaultKMax;
    std::uint64_t budget = GbOptions::kDefaultBudget;
    std::string order = "grevlex";
    std::string ideal = "nullcone";
    int i = -1, j = -1;
    std::string poly;
    std::string what = "oracle";
    unsigned threads = 0;
    std::string out;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"oracle", "dims", "gb", "member", "verify", "witness", "sweep"};
    return c;
}

inline json job_to_json(const JobSpec& job) {
    json j;
    j["command"] = job.command;
    if (job.group) j["group"] = group_name(*job.group);
    auto put = [&](const char* name, const std::optional<Range>& r) {
        if (!r) return;
        if (r->single())
            j[name] = r->values.front();
        else
            j[name] = r->values;
    };
    put("m", job.m);
    put("n", job.n);
    put("t", job.t);
    put("d", job.d);
    put("p", job.p);
    j["kmax"] = job.k_max;
    j["budget"] = job.budget;
    j["order"] = job.order;
    if (job.command == "gb" || job.command == "member") {
        j["ideal"] = job.ideal;
        if (job.ideal == "gl_component") {
            j["i"] = job.i;
            j["j"] = job.j;
        }
    }
    if (job.command == "member") j["poly"] = job.poly;
    if (job.command == "sweep") j["what"] = job.what;
    return j;
}

/// Every parameter tuple of the job in grid order: the group's size parameters in
/// their usual order (gl: m, n, t; sp: t, n; o and sl: d, n), then p, leftmost outermost.
inline std::vector<Params> expand_grid(const JobSpec& job) {
    auto vals = [](const std::optional<Range>& r) { return r ? r->values : std::vector<int>{0}; };
    std::vector<std::pair<int Params::*, std::vector<int>>> axes;
    switch (*job.group) {
        case Group::gl: axes = {{&Params::m, vals(job.m)}, {&Params::n, vals(job.n)}, {&Params::t, vals(job.t)}}; break;
        case Group::sp: axes = {{&Params::t, vals(job.t)}, {&Params::n, vals(job.n)}}; break;
        case Group::o:
        case Group::sl: axes = {{&Params::d, vals(job.d)}, {&Params::n, vals(job.n)}}; break;
    }
    std::vector<Params> out;
    Params q;
    q.group = *job.group;
    auto rec = [&](auto&& self, std::size_t axis) -> void {
        if (axis == axes.size()) {
            for (int p : vals(job.p)) {
                if (p < 0) throw InvalidArgument("characteristic must be non-negative");
                q.p = static_cast<std::uint64_t>(p);
                out.push_back(q);
            }
            return;
        }
        for (int v : axes[axis].second) {
            q.*axes[axis].first = v;
            self(self, axis + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// Checks everything that can be checked before any computation starts.
inline void validate(const JobSpec& job) {
    if (std::find(commands().begin(), commands().end(), job.command) == commands().end())
        throw InvalidArgument("unknown command '" + job.command + "'");
    if (!job.group) throw InvalidArgument("--group is required");
    auto need = [&](const std::optional<Range>& r, const char* name) {
        if (!r) throw InvalidArgument(std::string("--") + name + " is required for group " + group_name(*job.group));
    };
    auto forbid = [&](const std::optional<Range>& r, const char* name) {
        if (r) throw InvalidArgument(std::string("--") + name + " does not apply to group " + group_name(*job.group));
    };
    switch (*job.group) {
        case Group::gl: need(job.m, "m"), need(job.n, "n"), need(job.t, "t"), forbid(job.d, "d"); break;
        case Group::sp: need(job.t, "t"), need(job.n, "n"), forbid(job.m, "m"), forbid(job.d, "d"); break;
        case Group::o:
        case Group::sl: need(job.d, "d"), need(job.n, "n"), forbid(job.m, "m"), forbid(job.t, "t"); break;
    }
    if (!job.p) throw InvalidArgument("--p is required (0 for the rationals)");
    if (job.k_max < 2) throw InvalidArgument("--kmax must be at least 2");
    if (job.budget < 1) throw InvalidArgument("--budget must be positive");
    if (job.order != "grevlex" && job.order != "lex") throw InvalidArgument("--order must be grevlex or lex");
    static const std::vector<std::string> ideals{"nullcone", "gl_component", "o_char2", "o_S", "o_P", "o_Q"};
    if (std::find(ideals.begin(), ideals.end(), job.ideal) == ideals.end())
        throw InvalidArgument("unknown ideal '" + job.ideal + "'");
    if (job.ideal == "gl_component" && (job.i < 0 || job.j < 0))
        throw InvalidArgument("--ideal gl_component needs --i and --j");
    if (job.command == "member" && job.poly.empty()) throw InvalidArgument("member needs --poly");
    static const std::vector<std::string> whats{"oracle", "dims", "verify", "witness"};
    if (job.command == "sweep") {
        if (std::find(whats.begin(), whats.end(), job.what) == whats.end())
            throw InvalidArgument("--what must be one of oracle, dims, verify, witness");
    } else {
        for (const auto* r : {&job.m, &job.n, &job.t, &job.d, &job.p})
            if (*r && !(*r)->single()) throw InvalidArgument("parameter ranges are only allowed for sweep");
        validate(expand_grid(job).front());
    }
}

/// Result of a single computation: payload plus its status.
struct Outcome {
    json results;
    Status status = Status::ok;
};

struct ReportDocument {
    json job;
    json results;
    json timings_ms;
    Status status = Status::ok;
    std::optional<std::string> error;

    json to_json() const {
        json j;
        j["version"] = kVersion;
        j["job"] = job;
        j["results"] = results;
        j["timings_ms"] = timings_ms;
        j["status"] = status_name(status);
        if (error) j["error"] = *error;
        return j;
    }
    int exit_code() const { return cli::exit_code(status); }
};

namespace detail {

inline json evidence_json(const EvidenceReport& r) {
    json j;
    j["pure"] = r.verdict.pure;
    j["clause"] = r.verdict.clause;
    j["invariant_dim"] = r.invariant_dim;
    j["generator_count"] = r.generator_count;
    j["nullcone_codim"] = r.nullcone_codim ? json(*r.nullcone_codim) : json(nullptr);
    j["ci"] = r.ci ? json(*r.ci) : json(nullptr);
    j["regular"] = r.regular;
    j["witness_k"] = r.witness_k ? json(*r.witness_k) : json(nullptr);
    j["witness_undecided"] = r.witness_undecided;
    j["witness_status"] = r.witness_status;
    j["consistent"] = r.consistent;
    j["notes"] = r.notes;
    return j;
}

inline MonomialOrder order_of(const JobSpec& job) {
    return job.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
}

template <CoefficientField F>
Ideal<F> select_ideal(const Setup<F>& s, const JobSpec& job) {
    if (job.ideal == "nullcone") return nullcone_ideal(s);
    if (job.ideal == "gl_component") return gl_component(s, job.i, job.j);
    if (job.ideal == "o_char2") return o_char2_ideal(s);
    if (job.ideal == "o_S") return o_s_ideal(s);
    auto pq = o_pq_ideals(s);
    return job.ideal == "o_P" ? pq.first : pq.second;
}

inline std::vector<std::string> render_all(const auto& polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(p.to_string());
    return out;
}

inline Outcome run_oracle(const Params& q) {
    auto v = purity_oracle(q);
    return {json{{"pure", v.pure}, {"clause", v.clause}, {"p", v.p}}, Status::ok};
}

inline Outcome run_dims(const Params& q, const JobSpec& job) {
    DimReport r = closed_form_dims(q);
    json j;
    j["invariant_dim"] = r.invariant_dim;
    j["invariant_formula"] = r.invariant_formula;
    j["ambient_dim"] = r.ambient_dim;
    json closed = json::array();
    for (const auto& d : r.dims) closed.push_back({{"label", d.label}, {"formula", d.formula}, {"value", d.value}});
    j["closed_form"] = closed;
    GbOptions opts{job.budget, std::nullopt};
    Status status = Status::ok;
    json computed = json::object();
    bool agree = true;
    with_field(FieldSpec{q.p}, [&](auto field) {
        using F = decltype(field);
        auto s = build_setup<F>(q, field, order_of(job));
        auto check = [&](const std::string& label, const Ideal<F>& ideal) {
            try {
                int dim = krull_dimension(ideal, opts);
                computed[label] = dim;
                if (auto cf = r.find(label); cf && *cf != dim) agree = false;
            } catch (const BudgetExhausted& e) {
                computed[label] = std::string(e.what());
                status = Status::inconclusive;
            }
        };
        check("nullcone", nullcone_ideal(s));
        if (q.group == Group::gl)
            for (int i = 0; i <= q.t; ++i)
                check("component_" + std::to_string(i) + "_" + std::to_string(q.t - i), gl_component(s, i, q.t - i));
        if constexpr (std::is_same_v<F, PrimeField>) {
            if (q.group == Group::o && q.d % 2 == 0 && q.d / 2 <= q.n && q.p % 4 == 1) {
                auto [p, qq] = o_pq_ideals(s);
                check("P", p);
                check("Q", qq);
                check("P+Q", ideal_sum(p, qq));
            }
        }
    });
    j["computed"] = computed;
    j["agree"] = agree;
    if (!agree) status = Status::error;
    return {j, status};
}

inline Outcome run_gb(const Params& q, const JobSpec& job) {
    GbOptions opts{job.budget, std::nullopt};
    return with_field(FieldSpec{q.p}, [&](auto field) {
        using F = decltype(field);
        auto s = build_setup<F>(q, field, order_of(job));
        auto ideal = select_ideal(s, job);
        const auto& g = ideal.groebner(opts);
        json j;
        j["ideal"] = job.ideal;
        j["order"] = s.ring->order().name();
        j["variables"] = s.ring->names();
        j["generators"] = render_all(ideal.generators());
        j["basis"] = render_all(g.elements);
        j["size"] = g.elements.size();
        return Outcome{j, Status::ok};
    });
}

inline Outcome run_member(const Params& q, const JobSpec& job) {
    GbOptions opts{job.budget, std::nullopt};
    return with_field(FieldSpec{q.p}, [&](auto field) {
        using F = decltype(field);
        auto s = build_setup<F>(q, field, order_of(job));
        auto ideal = select_ideal(s, job);
        auto f = parse_poly(job.poly, s.ring);
        auto nf = normal_form(f, ideal.groebner(opts), opts);
        json j;
        j["ideal"] = job.ideal;
        j["poly"] = f.to_string();
        j["member"] = nf.is_zero();
        j["normal_form"] = nf.to_string();
        return Outcome{j, Status::ok};
    });
}

inline Outcome run_verify(const Params& q, const JobSpec& job) {
    if (q.p == 0) throw InvalidArgument("verify needs positive characteristic");
    GbOptions opts{job.budget, std::nullopt};
    auto s = build_setup<PrimeField>(q, PrimeField(q.p), order_of(job));
    auto r = purity_evidence(s, job.k_max, opts);
    return {evidence_json(r), r.consistent && r.nullcone_codim ? Status::ok : Status::inconclusive};
}

inline Outcome run_witness(const Params& q, const JobSpec& job) {
    if (q.p == 0) throw InvalidArgument("witness needs positive characteristic");
    GbOptions opts{job.budget, std::nullopt};
    auto s = build_setup<PrimeField>(q, PrimeField(q.p), order_of(job));
    auto w = frobenius_witness(s, job.k_max, opts);
    json j;
    j["witness_k"] = w.k ? json(*w.k) : json(nullptr);
    j["minimal"] = w.minimal();
    j["undecided"] = w.undecided;
    j["kmax"] = job.k_max;
    j["oracle_pure"] = purity_oracle(q).pure;
    Status st = w.undecided.empty() || (w.k && w.minimal()) ? Status::ok : Status::inconclusive;
    return {j, st};
}

inline Outcome run_single(const std::string& command, const Params& q, const JobSpec& job) {
    if (command == "oracle") return run_oracle(q);
    if (command == "dims") return run_dims(q, job);
    if (command == "gb") return run_gb(q, job);
    if (command == "member") return run_member(q, job);
    if (command == "verify") return run_verify(q, job);
    if (command == "witness") return run_witness(q, job);
    throw InvalidArgument("unknown command '" + command + "'");
}

inline json params_json(const Params& q) {
    json j;
    switch (q.group) {
        case Group::gl: j = {{"m", q.m}, {"n", q.n}, {"t", q.t}}; break;
        case Group::sp: j = {{"t", q.t}, {"n", q.n}}; break;
        case Group::o:
        case Group::sl: j = {{"d", q.d}, {"n", q.n}}; break;
    }
    j["p"] = q.p;
    return j;
}

inline Outcome run_sweep(const JobSpec& job) {
    auto grid = expand_grid(job);
    struct Slot {
        bool skipped = false;
        std::string reason;
        Outcome outcome;
    };
    std::vector<Slot> slots(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < grid.size();) {
            const Params& q = grid[k];
            try {
                validate(q);
                if ((job.what == "verify" || job.what == "witness") && q.p == 0)
                    throw InvalidArgument("needs positive characteristic");
                if (job.what == "witness" && !invariant_ring_is_regular(q))
                    throw InvalidArgument("invariant ring not regular");
                if (job.what != "oracle" && ambient_variable_count(q) > kMaxVariables)
                    throw InvalidArgument("too many variables");
            } catch (const InvalidArgument& e) {
                slots[k].skipped = true;
                slots[k].reason = e.what();
                continue;
            }
            try {
                slots[k].outcome = run_single(job.what, q, job);
            } catch (const std::exception& e) {
                slots[k].outcome = {json{{"error", e.what()}}, Status::error};
            }
        }
    };
    unsigned threads = job.threads ? job.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    json items = json::array(), skipped = json::array();
    Status status = Status::ok;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (slots[k].skipped) {
            skipped.push_back({{"params", params_json(grid[k])}, {"reason", slots[k].reason}});
            continue;
        }
        const auto& o = slots[k].outcome;
        items.push_back({{"params", params_json(grid[k])}, {"status", status_name(o.status)}, {"result", o.results}});
        if (o.status == Status::error)
            status = Status::error;
        else if (o.status == Status::inconclusive && status == Status::ok)
            status = Status::inconclusive;
    }
    return {json{{"what", job.what}, {"items", items}, {"skipped", skipped}}, status};
}

}  // namespace detail

/// Runs a job; never throws. Errors become a report with status error.
inline ReportDocument run(const JobSpec& job) {
    ReportDocument doc;
    auto start = std::chrono::steady_clock::now();
    try {
        doc.job = job_to_json(job);
        validate(job);
        Outcome o = job.command == "sweep" ? detail::run_sweep(job)
                                           : detail::run_single(job.command, expand_grid(job).front(), job);
        doc.results = std::move(o.results);
        doc.status = o.status;
    } catch (const BudgetExhausted& e) {
        doc.results = json::object();
        doc.status = Status::inconclusive;
        doc.error = e.what();
    } catch (const std::exception& e) {
        doc.results = json::object();
        doc.status = Status::error;
        doc.error = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    doc.timings_ms = json{{"total", static_cast<std::int64_t>(ms.count())}};
    return doc;
}

/// Declares the command-line options on app, writing into job.
inline void configure(CLI::App& app, JobSpec& job, std::string& group, std::string& m, std::string& n, std::string& t,
                      std::string& d, std::string& p) {
    app.add_option("command", job.command, "oracle | dims | gb | member | verify | witness | sweep")->required();
    app.add_option("--group", group, "gl | sp | o | sl")->required();
    app.add_option("--m", m, "rows of Y (gl)");
    app.add_option("--n", n, "columns of Y");
    app.add_option("--t", t, "inner size (gl) or half the rows of Y (sp)");
    app.add_option("--d", d, "rows of Y (o, sl)");
    app.add_option("--p", p, "characteristic, 0 for the rationals");
    app.add_option("--kmax", job.k_max, "largest exponent tried by the witness search");
    app.add_option("--budget", job.budget, "reduction steps allowed per Groebner computation");
    app.add_option("--order", job.order, "grevlex | lex");
    app.add_option("--ideal", job.ideal, "nullcone | gl_component | o_char2 | o_S | o_P | o_Q");
    app.add_option("--i", job.i, "component index i (gl_component)");
    app.add_option("--j", job.j, "component index j (gl_component)");
    app.add_option("--poly", job.poly, "polynomial for member");
    app.add_option("--what", job.what, "computation run by sweep: oracle | dims | verify | witness");
    app.add_option("--threads", job.threads, "sweep worker count, 0 for all cores");
    app.add_option("--out", job.out, "write the report to this file instead of stdout");
}

/// Builds a JobSpec from argv; throws CLI::ParseError or InvalidArgument.
inline JobSpec parse_job(int argc, const char* const* argv) {
    CLI::App app{"Purity and nullcone computations for classical invariant rings", "nullcone"};
    JobSpec job;
    std::string group, m, n, t, d, p;
    configure(app, job, group, m, n, t, d, p);
    app.parse(argc, argv);
    job.group = parse_group(group);
    auto range = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<Range>(Range::parse(s)); };
    job.m = range(m);
    job.n = range(n);
    job.t = range(t);
    job.d = range(d);
    job.p = range(p);
    return job;
}

}  // namespace nullcone::cli
