#pragma once

#include "flagtop/bounds.hpp"
#include "flagtop/canonical.hpp"
#include "flagtop/constructions.hpp"
#include "flagtop/enumerate.hpp"
#include "flagtop/validators.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace flagtop {

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

/// Every named construction used by the corpus-wide checks, in a fixed order.
inline std::vector<NamedComplex> construction_corpus()
{
    std::vector<NamedComplex> out;
    auto add = [&](std::string name, SimplicialComplex K) { out.push_back({std::move(name), std::move(K)}); };
    auto num = [](int x) { return std::to_string(x); };
    for (int k : {4, 5, 8})
        add("cycle(" + num(k) + ")", cycle(k));
    for (int d = 3; d <= 6; ++d)
        add("cross(" + num(d) + ")", cross_polytope_boundary(d));
    for (int n = 8; n <= 16; ++n)
        add("J(2," + num(n) + ")", balanced_join(2, n));
    for (int n = 12; n <= 16; ++n)
        add("J(3," + num(n) + ")", balanced_join(3, n));
    for (int n = 6; n <= 8; ++n)
        add("Jstar(1," + num(n) + ")", suspended_join(1, n));
    for (int n = 10; n <= 12; ++n)
        add("Jstar(2," + num(n) + ")", suspended_join(2, n));
    for (int n = 8; n <= 20; ++n)
        for (const auto& spec : gj_enumerate_specs(n))
            add("gj(" + to_string(spec) + ")", gj(spec));
    add("remark(4,4,4,4)", remark_complex(4, 4, 4, 4));
    add("remark(5,4,6,4)", remark_complex(5, 4, 6, 4));
    add("torus(4,4)", grid_torus(4, 4));
    add("torus(4,5)", grid_torus(4, 5));
    add("susp(torus(4,4))", suspension(grid_torus(4, 4)));
    for (auto lengths : std::vector<std::vector<int>>{{4, 6}, {4, 7}, {5, 7}, {4, 4, 6}, {4, 5, 7}})
        add("joincycles(" + std::accumulate(std::next(lengths.begin()), lengths.end(), num(lengths[0]),
                                            [&](std::string a, int b) { return a + "," + num(b); }) + ")",
            join_of_cycles(lengths));
    add("susp(Jstar(2,10))", suspension(suspended_join(2, 10)));
    add("sd(triangle)", barycentric_subdivision(SimplicialComplex(3, {Face{0, 1, 2}})));
    add("sd(cross(3))", barycentric_subdivision(cross_polytope_boundary(3)));
    add("cross(3)+cross(3)", disjoint_union(cross_polytope_boundary(3), cross_polytope_boundary(3)));
    add("cone(cycle(4))", join(SimplicialComplex(1, {Face{0}}), cycle(4)));
    return out;
}

/// Outcome of one acceptance criterion.
struct CheckOutcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds = 0;
    std::function<CheckOutcome(unsigned threads)> run;
};

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;

    bool within_limit() const noexcept { return seconds < limit_seconds; }
    bool ok() const noexcept { return passed && within_limit(); }
};

namespace detail {

class Tally {
public:
    void check(bool ok, const std::string& what)
    {
        ++checked_;
        if (!ok && failures_.size() < 5)
            failures_.push_back(what);
        failed_ += !ok;
    }
    CheckOutcome outcome(const std::string& summary) const
    {
        std::string d = summary + "; " + std::to_string(checked_) + " checks, " + std::to_string(failed_) + " failed";
        for (const auto& f : failures_)
            d += "; " + f;
        return {failed_ == 0 && checked_ > 0, d};
    }
    std::size_t failed() const noexcept { return failed_; }

private:
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string fmt_seconds(double s)
{
    std::ostringstream o;
    o.precision(s < 10 ? 2 : 1);
    o << std::fixed << s << " s";
    return o.str();
}

inline std::int64_t edges(const SimplicialComplex& K) { return static_cast<std::int64_t>(one_skeleton(K).edge_count()); }

inline SimplicialComplex random_complex(std::mt19937_64& rng, int max_n, int max_facet)
{
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    const int count = std::uniform_int_distribution<int>(1, 2 * n)(rng);
    std::uniform_int_distribution<int> size(1, std::min(n, max_facet));
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0U);
    std::vector<Face> gens;
    for (int i = 0; i < count; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        gens.push_back(Face::from_vertices(std::span<const Vertex>(perm.data(), static_cast<std::size_t>(size(rng)))));
    }
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        gens.push_back(Face{v});
    return SimplicialComplex::generated_by(static_cast<std::size_t>(n), gens);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

/// Faces of K as sorted vertex lists, by expanding each facet into its subsets.
inline std::set<std::vector<Vertex>> brute_faces(const SimplicialComplex& K)
{
    std::set<std::vector<Vertex>> out;
    for (Face f : K.facets()) {
        const std::vector<Vertex> vs = f.vertices();
        for (std::size_t bits = 0; bits < (std::size_t{1} << vs.size()); ++bits) {
            std::vector<Vertex> s;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if ((bits >> i) & 1U)
                    s.push_back(vs[i]);
            out.insert(std::move(s));
        }
    }
    return out;
}

inline bool in_gj(const SimplicialComplex& K)
{
    if (K.n() < 8 || K.n() > kMaxCanonicalVertices || !is_flag(K))
        return false;
    const auto form = canonical_form(one_skeleton(K));
    for (const auto& spec : gj_enumerate_specs(static_cast<int>(K.n())))
        if (canonical_form(one_skeleton(gj(spec))) == form)
            return true;
    return false;
}

// -- the criteria -------------------------------------------------------------------------------

inline CheckOutcome formula_construction_agreement(unsigned)
{
    Tally t;
    for (int m = 1; m <= 4; ++m) {
        for (int n = 4 * m; n <= 40; ++n)
            t.check(edges(balanced_join(m, n)) == f1_J(m, n), "J(" + std::to_string(m) + "," + std::to_string(n) + ")");
        for (int n = 4 * m + 2; n <= 40; ++n)
            t.check(edges(suspended_join(m, n)) == f1_Jstar(m, n),
                    "Jstar(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
    return t.outcome("f1 of balanced and suspended joins vs closed forms, m=1..4, n<=40");
}

inline CheckOutcome eulerian_fvector_law(unsigned threads)
{
    Tally t;
    std::size_t count = 0;
    auto law = [&](const SimplicialComplex& K, const std::string& name) {
        t.check(is_eulerian(K).holds, name + " is Eulerian");
        const FVector f = f_vector(K);
        t.check(f == eulerian3_fvector(f[0], f[1]), name + " f=" + f.to_string());
        ++count;
    };
    for (int n = 8; n <= 20; ++n)
        for (const auto& spec : gj_enumerate_specs(n))
            law(gj(spec), "gj(" + to_string(spec) + ")");
    for (int n = 8; n <= 40; ++n)
        law(balanced_join(2, n), "J(2," + std::to_string(n) + ")");
    for (int n = 8; n <= 10; ++n) {
        const auto r = enumerate_class(n, ComplexClass::flag_eulerian_3, {std::nullopt, threads});
        for (std::size_t i = 0; i < r.count(); ++i)
            law(r.representatives[i], "enumerated n=" + std::to_string(n) + " #" + std::to_string(i));
    }
    return t.outcome(std::to_string(count) + " Eulerian 3-complexes satisfy (f2,f3) = (2f1-2f0, f1-f0)");
}

inline CheckOutcome gj_maximizers(unsigned)
{
    Tally t;
    std::size_t specs = 0;
    for (int n = 8; n <= 20; ++n) {
        const FVector target = f_vector(balanced_join(2, n));
        for (const auto& spec : gj_enumerate_specs(n)) {
            const auto K = gj(spec);
            t.check(is_flag(K) && is_eulerian(K) && f_vector(K) == target, "gj(" + to_string(spec) + ")");
            ++specs;
        }
    }
    return t.outcome(std::to_string(specs) + " GJ specs for n=8..20 are flag, Eulerian, f = f(J(2,n))");
}

inline CheckOutcome facet_sum_lemmas(unsigned threads)
{
    Tally t;
    std::vector<NamedComplex> corpus = construction_corpus();
    for (int n = 8; n <= 10; ++n) {
        const auto r = enumerate_class(n, ComplexClass::flag_normal_3pm, {std::nullopt, threads});
        for (std::size_t i = 0; i < r.count(); ++i)
            corpus.push_back({"enumerated n=" + std::to_string(n) + " #" + std::to_string(i), r.representatives[i]});
    }
    std::size_t complexes = 0;
    std::size_t facets = 0;
    std::size_t maximizers = 0;
    std::size_t tight_elsewhere = 0;
    for (const auto& [name, K] : corpus) {
        if (K.dim() != 3 || !is_flag(K) || !is_weak_pseudomanifold(K))
            continue;
        ++complexes;
        const auto sums = check_facet_sums(K);
        facets += sums.size() / 2;
        bool all_tight = true;
        for (const auto& r : sums) {
            t.check(r.holds(), name + " " + r.bound_name + " " + std::to_string(r.lhs) + " > " + std::to_string(r.rhs));
            if (r.tight)
                t.check(r.equality_condition.value_or(false), name + " tight facet without covering ridge links");
            all_tight = all_tight && r.tight;
        }
        const bool maximizer = K.n() >= 8 && edges(K) == f1_J(2, static_cast<std::int64_t>(K.n())) && is_eulerian(K);
        if (maximizer) {
            ++maximizers;
            t.check(in_gj(K) || K.n() > kMaxCanonicalVertices, name + " maximizer outside GJ(n)");
            t.check(all_tight, name + " maximizer with a slack facet");
        } else if (all_tight) {
            ++tight_elsewhere;
        }
    }
    return t.outcome(std::to_string(facets) + " facets of " + std::to_string(complexes) +
                     " flag weak 3-pms; every facet of the " + std::to_string(maximizers) +
                     " GJ/J2 maximizers tight on both sums; " + std::to_string(tight_elsewhere) +
                     " non-maximizers also tight everywhere (joins of two circles)");
}

inline CheckOutcome uniqueness_few_vertices(unsigned threads)
{
    Tally t;
    std::string times;
    for (int n : {8, 9}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = enumerate_class(n, ComplexClass::flag_normal_3pm, {std::nullopt, threads});
        const double s = seconds_since(t0);
        const auto expected = n == 8 ? cross_polytope_boundary(4) : balanced_join(2, 9);
        t.check(r.count() == 1, "n=" + std::to_string(n) + " gave " + std::to_string(r.count()) + " classes");
        t.check(r.count() == 1 && are_isomorphic(r.representatives[0], expected), "n=" + std::to_string(n) + " class");
        t.check(s < 60.0, "n=" + std::to_string(n) + " took " + fmt_seconds(s));
        times += (times.empty() ? "" : ", ") + ("n=" + std::to_string(n) + " in " + fmt_seconds(s));
    }
    return t.outcome("one class each: C4* at n=8, J(2,9) at n=9 (" + times + ")");
}

inline CheckOutcome three_manifold_n10(unsigned threads)
{
    Tally t;
    const auto r = enumerate_class(10, ComplexClass::flag_3_manifold, {std::nullopt, threads});
    std::int64_t best = 0;
    for (const auto& f : r.f_vectors)
        best = std::max(best, f[1]);
    std::size_t at_best = 0;
    for (std::size_t i = 0; i < r.count(); ++i)
        if (r.f_vectors[i][1] == best) {
            ++at_best;
            t.check(are_isomorphic(r.representatives[i], balanced_join(2, 10)), "maximizer is not J(2,10)");
        }
    t.check(best == 35 && best == 100 / 4 + 10, "max f1 = " + std::to_string(best));
    t.check(at_best == 1, std::to_string(at_best) + " classes attain the maximum");
    return t.outcome(std::to_string(r.count()) + " flag 3-manifold classes on 10 vertices, max f1 = " +
                     std::to_string(best) + " attained by " + std::to_string(at_best));
}

inline CheckOutcome eulerian_equality_case(unsigned threads)
{
    Tally t;
    std::string counts;
    for (int n : {8, 9, 10}) {
        const auto m = maximizers(n, ComplexClass::flag_eulerian_3, threads);
        t.check(m.matches_gj, "n=" + std::to_string(n) + " maximizers differ from GJ(n)");
        counts += (counts.empty() ? "" : ", ") + ("n=" + std::to_string(n) + ": " + std::to_string(m.result.count()) +
                                                  "/" + std::to_string(m.specs.size()));
    }
    return t.outcome("maximizers vs GJ specs (" + counts + ")");
}

inline CheckOutcome weak_not_normal(unsigned)
{
    Tally t;
    const auto R = remark_complex(4, 4, 4, 4);
    t.check(is_flag(R).holds, "not flag");
    t.check(is_weak_pseudomanifold(R).holds, "not a weak pseudomanifold");
    const Verdict normal = is_normal_pseudomanifold(R);
    t.check(!normal.holds, "normal");
    // τ1 an edge of L1, τ2 an edge of L3.
    const auto j = check_join_criterion(R, Face{0, 1}, Face{8, 9});
    t.check(j.covers, "links do not cover V");
    t.check(j.contained && !j.equal, "containment is not strict");
    std::string w = normal.witness ? normal.witness->detail : "";
    return t.outcome("flag weak 3-pm, not normal (" + w + "); K strictly inside lk t1 * lk t2");
}

inline CheckOutcome property_suites(unsigned)
{
    constexpr int kInstances = 200;
    std::mt19937_64 rng(0x5eed);
    Tally conv, euler, degree, flaglink, oracle;
    for (int i = 0; i < kInstances; ++i) {
        const auto K = random_complex(rng, 8, 4);
        const auto L = random_complex(rng, 8, 4);
        const auto fk = f_vector(K);
        const auto fl = f_vector(L);
        const auto fj = f_vector(join(K, L));
        bool ok = true;
        for (int k = -1; k <= fj.dim(); ++k) {
            std::int64_t s = 0;
            for (int a = -1; a <= fk.dim(); ++a)
                s += fk[a] * fl[k - 1 - a];
            ok = ok && s == fj[k];
        }
        conv.check(ok, "convolution instance " + std::to_string(i));
        euler.check(fj.reduced_euler_char() == -fk.reduced_euler_char() * fl.reduced_euler_char(),
                    "multiplicativity instance " + std::to_string(i));
    }
    for (int i = 0; i < kInstances; ++i) {
        const auto K = random_complex(rng, 10, 5);
        const Graph g = one_skeleton(K);
        std::int64_t sum = 0;
        for (Vertex v = 0; v < K.n(); ++v)
            sum += link_vertices(K, Face{v}).size();
        degree.check(sum == 2 * static_cast<std::int64_t>(g.edge_count()) && sum == 2 * f_vector(K)[1],
                     "double counting instance " + std::to_string(i));
    }
    for (int i = 0; i < kInstances; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        const auto K = clique_complex(random_graph(rng, n, 0.55));
        bool ok = true;
        for (Face s : K.all_faces()) {
            const Subcomplex lk = link(K, s);
            if (lk.complex.dim() < 0)
                continue;
            const Subcomplex res = restriction(K, lk.parent_vertices());
            ok = ok && res.complex == lk.complex && res.to_parent == lk.to_parent;
        }
        flaglink.check(ok, "flag link/restriction instance " + std::to_string(i));
    }
    for (int i = 0; i < kInstances; ++i) {
        const auto K = random_complex(rng, 12, 5);
        const auto brute = brute_faces(K);
        std::vector<std::vector<Vertex>> by_lib;
        for (int d = -1; d <= K.dim(); ++d)
            for (Face f : faces(K, d))
                by_lib.push_back(f.vertices());
        std::vector<std::vector<Vertex>> expected(brute.begin(), brute.end());
        std::stable_sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
        oracle.check(by_lib == expected, "face enumeration instance " + std::to_string(i));
    }
    std::string parts;
    const std::pair<const char*, const Tally*> suites[] = {{"join convolution", &conv},
                                                           {"euler multiplicativity", &euler},
                                                           {"double counting", &degree},
                                                           {"flag link = restriction", &flaglink},
                                                           {"face oracle", &oracle}};
    std::size_t failed = 0;
    for (const auto& [name, tally] : suites) {
        failed += tally->failed();
        parts += (parts.empty() ? "" : ", ") + std::string(name) + " " + std::to_string(tally->failed()) + " failures";
    }
    return {failed == 0, std::to_string(kInstances) + " random instances per suite: " + parts};
}

inline CheckOutcome five_manifold_consistency(unsigned)
{
    Tally t;
    for (int n = 12; n <= 40; ++n)
        t.check(edges(balanced_join(3, n)) == f1_J(3, n), "J(3," + std::to_string(n) + ")");
    std::size_t five = 0;
    for (const auto& [name, K] : construction_corpus()) {
        if (K.dim() != 5 || K.n() < 12 || !is_flag(K))
            continue;
        ++five;
        t.check(edges(K) <= f1_J(3, static_cast<std::int64_t>(K.n())), name + " exceeds f1(J(3,n))");
        if (is_eulerian(K))
            for (const auto& r : check_generic_bound(K, 3))
                t.check(r.holds(), name + " " + r.bound_name);
    }
    return t.outcome("f1(J(3,n)) = closed form for n=12..40; " + std::to_string(five) +
                     " constructed flag 5-complexes within the bound (consistency check, not a proof)");
}

} // namespace detail

/// Every acceptance criterion, in order.
inline std::vector<Criterion> all_criteria()
{
    return {
        {"AC1", "formula-construction agreement", 5, detail::formula_construction_agreement},
        {"AC2", "Eulerian f-vector law", 5, detail::eulerian_fvector_law},
        {"AC3", "GJ maximizers, n=8..20", 10, detail::gj_maximizers},
        {"AC4", "facet-sum lemmas over the corpus", 30, detail::facet_sum_lemmas},
        {"AC5", "uniqueness at 8 and 9 vertices", 120, detail::uniqueness_few_vertices},
        {"AC6", "flag 3-manifolds on 10 vertices", 600, detail::three_manifold_n10},
        {"AC7", "Eulerian equality case, n=8,9,10", 600, detail::eulerian_equality_case},
        {"AC8", "weak but not normal counterexample", 1, detail::weak_not_normal},
        {"AC9", "property suites", 60, detail::property_suites},
        {"AC10", "5-manifold formula consistency", 5, detail::five_manifold_consistency},
    };
}

/// Checked-in suite manifest: suite id -> criterion ids.
inline const std::vector<std::pair<std::string_view, std::vector<std::string_view>>>& suite_manifest()
{
    static const std::vector<std::pair<std::string_view, std::vector<std::string_view>>> manifest = {
        {"paper-core", {"AC1", "AC2", "AC3", "AC4", "AC5", "AC6", "AC7", "AC8", "AC9", "AC10"}},
        {"quick", {"AC1", "AC3", "AC5", "AC8", "AC10"}},
    };
    return manifest;
}

inline std::vector<Criterion> suite(std::string_view name)
{
    for (const auto& [id, members] : suite_manifest()) {
        if (id != name)
            continue;
        std::vector<Criterion> out;
        for (auto& c : all_criteria())
            if (std::find(members.begin(), members.end(), c.id) != members.end())
                out.push_back(std::move(c));
        return out;
    }
    throw Error("unknown suite '" + std::string(name) + "'");
}

inline CriterionResult run_criterion(const Criterion& c, unsigned threads = 0)
{
    CriterionResult r{c.id, c.title};
    r.limit_seconds = c.limit_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const CheckOutcome o = c.run(resolve_threads(threads));
        r.passed = o.passed;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = detail::seconds_since(t0);
    return r;
}

/// "[PASS] AC1 title: detail (0.12 s, limit 5 s)"
inline std::string format_line(const CriterionResult& r)
{
    std::ostringstream o;
    o << (r.ok() ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail << " ("
      << detail::fmt_seconds(r.seconds) << ", limit " << r.limit_seconds << " s"
      << (r.within_limit() ? "" : ", TIME LIMIT EXCEEDED") << ")";
    return o.str();
}

inline constexpr std::string_view kVerifySchema = "flagtop.verify/1";

/// Timings are left out so the document is reproducible.
inline nlohmann::ordered_json to_json(const std::string& suite_name, const std::vector<CriterionResult>& results)
{
    nlohmann::ordered_json j;
    j["schema"] = kVerifySchema;
    j["suite"] = suite_name;
    bool all = true;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json e;
        e["id"] = r.id;
        e["title"] = r.title;
        e["passed"] = r.ok();
        e["limit_seconds"] = r.limit_seconds;
        e["detail"] = r.detail;
        arr.push_back(std::move(e));
        all = all && r.ok();
    }
    j["passed"] = all;
    j["criteria"] = std::move(arr);
    return j;
}

} // namespace flagtop
