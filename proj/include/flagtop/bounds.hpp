#pragma once

#include "flagtop/complex.hpp"
#include "flagtop/constructions.hpp"
#include "flagtop/io.hpp"
#include "flagtop/validators.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flagtop {

/// A checker was called on a complex outside the class its inequality is about.
class PreconditionError : public Error {
public:
    PreconditionError(std::string validator, const std::string& detail)
        : Error("precondition failed: " + validator + (detail.empty() ? "" : " (" + detail + ")")),
          validator_(std::move(validator))
    {
    }
    const std::string& validator() const noexcept { return validator_; }

private:
    std::string validator_;
};

/// Result of comparing an observed count against a bound.
struct BoundReport {
    std::string bound_name;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool tight = false;
    /// Facet or vertex realising the reported value; ties go to the lexicographically first.
    std::vector<Face> witness;
    /// Extra condition that must accompany equality, evaluated only when tight.
    std::optional<bool> equality_condition;

    bool holds() const noexcept { return lhs <= rhs; }
    std::int64_t slack() const noexcept { return rhs - lhs; }
};

namespace detail {
inline std::int64_t exact_div(std::int64_t num, std::int64_t den)
{
    if (num % den != 0)
        throw Error("internal error: non-integral closed form " + std::to_string(num) + "/" + std::to_string(den));
    return num / den;
}
} // namespace detail

/// Number of edges of J_m(n): ((m-1) n^2 + q(q-m)) / 2m + n with q = n mod m.
inline std::int64_t f1_J(std::int64_t m, std::int64_t n)
{
    if (m < 1 || n < 4 * m)
        throw Error("f1_J needs m >= 1 and n >= 4m");
    const std::int64_t q = n % m;
    return detail::exact_div((m - 1) * n * n + q * (q - m), 2 * m) + n;
}

/// Number of edges of J*_m(n): ((m-1)(n-2)^2 + q(q-m)) / 2m + 3(n-2) with q = (n-2) mod m.
inline std::int64_t f1_Jstar(std::int64_t m, std::int64_t n)
{
    if (m < 1 || n < 4 * m + 2)
        throw Error("f1_Jstar needs m >= 1 and n >= 4m+2");
    const std::int64_t k = n - 2;
    const std::int64_t q = k % m;
    return detail::exact_div((m - 1) * k * k + q * (q - m), 2 * m) + 3 * k;
}

/// f-vector of a 3-dimensional Eulerian complex: (1, f0, f1, 2 f1 - 2 f0, f1 - f0).
inline FVector eulerian3_fvector(std::int64_t f0, std::int64_t f1)
{
    if (f0 < 5 || f1 < f0)
        throw Error("eulerian3_fvector needs f1 >= f0 >= 5");
    return FVector({1, f0, f1, 2 * f1 - 2 * f0, f1 - f0});
}

namespace detail {

inline void require(const Verdict& v, const std::string& name)
{
    if (!v)
        throw PreconditionError(name, v.witness ? v.witness->detail : "");
}

inline void require_dim3(const SimplicialComplex& K)
{
    if (K.dim() != 3)
        throw PreconditionError("dimension", "expected a 3-dimensional complex, got dimension " + std::to_string(K.dim()));
}

inline void require_facet(const SimplicialComplex& K, Face sigma)
{
    if (!K.is_facet(sigma))
        throw Error("not a facet: " + sigma.to_string());
}

/// f_0(lk v) for every vertex: the vertex degrees.
inline std::vector<int> degrees(const SimplicialComplex& K)
{
    const Graph g = one_skeleton(K);
    std::vector<int> d(K.n());
    for (Vertex v = 0; v < K.n(); ++v)
        d[v] = g.degree(v);
    return d;
}

inline std::int64_t link_size(const SimplicialComplex& K, Face sigma)
{
    return link_vertices(K, sigma).size();
}

/// For every ridge τ of σ, the links of the vertices of τ cover V(K).
inline bool ridge_links_cover(const SimplicialComplex& K, Face sigma)
{
    bool ok = true;
    sigma.for_each_vertex([&](Vertex drop) {
        const Face tau = sigma.without(drop);
        Face cover;
        tau.for_each_vertex([&](Vertex w) { cover = cover | link_vertices(K, Face{w}); });
        ok = ok && cover == K.vertex_set();
    });
    return ok;
}

inline BoundReport edge_sum_unchecked(const SimplicialComplex& K, Face sigma)
{
    BoundReport r{"facet-edge-sum", static_cast<std::int64_t>(K.n()), 2};
    detail::for_each_k_subset(sigma, 2, [&](Face e) { r.lhs += link_size(K, e); });
    r.rhs = static_cast<std::int64_t>(K.n()) + 16;
    r.tight = r.lhs == r.rhs;
    r.witness = {sigma};
    if (r.tight)
        r.equality_condition = ridge_links_cover(K, sigma);
    return r;
}

inline BoundReport vertex_sum_unchecked(const SimplicialComplex& K, Face sigma, const std::vector<int>& deg)
{
    BoundReport r{"facet-vertex-sum", static_cast<std::int64_t>(K.n()), 2};
    sigma.for_each_vertex([&](Vertex v) { r.lhs += deg[v]; });
    r.rhs = 2 * static_cast<std::int64_t>(K.n()) + 8;
    r.tight = r.lhs == r.rhs;
    r.witness = {sigma};
    if (r.tight)
        r.equality_condition = ridge_links_cover(K, sigma);
    return r;
}

inline void require_flag_weak3(const SimplicialComplex& K)
{
    require_dim3(K);
    require(is_flag(K), "is_flag");
    require(is_weak_pseudomanifold(K), "is_weak_pseudomanifold");
}

} // namespace detail

/// f_1(K) <= f_1(J_2(n)) for flag 3-dimensional Eulerian K. Witness: a vertex of maximum degree.
inline BoundReport check_upper_bound_3dim(const SimplicialComplex& K)
{
    detail::require_dim3(K);
    detail::require(is_flag(K), "is_flag");
    detail::require(is_eulerian(K), "is_eulerian");
    const Graph g = one_skeleton(K);
    BoundReport r{"upper-bound-3dim", static_cast<std::int64_t>(K.n()), 2};
    r.lhs = static_cast<std::int64_t>(g.edge_count());
    r.rhs = K.n() >= 8 ? f1_J(2, static_cast<std::int64_t>(K.n())) : 0;
    r.tight = r.lhs == r.rhs;
    Vertex best = 0;
    for (Vertex v = 1; v < K.n(); ++v)
        if (g.degree(v) > g.degree(best))
            best = v;
    r.witness = {Face{best}};
    return r;
}

/// f_1(K) <= f_1(J_2(n)) + c with c = 3 - 3 min_v χ̃(lk v), for flag normal 3-pseudomanifolds.
/// Witness: the vertex attaining the minimum.
inline BoundReport check_lemma_c_bound(const SimplicialComplex& K)
{
    detail::require_dim3(K);
    detail::require(is_flag(K), "is_flag");
    detail::require(is_normal_pseudomanifold(K), "is_normal_pseudomanifold");
    Vertex arg = 0;
    std::int64_t min_chi = 0;
    for (Vertex v = 0; v < K.n(); ++v) {
        const std::int64_t chi = link_euler_char(K, Face{v});
        if (v == 0 || chi < min_chi) {
            min_chi = chi;
            arg = v;
        }
    }
    BoundReport r{"c-bound", static_cast<std::int64_t>(K.n()), 2};
    r.lhs = static_cast<std::int64_t>(one_skeleton(K).edge_count());
    r.rhs = f1_J(2, static_cast<std::int64_t>(K.n())) + 3 - 3 * min_chi;
    r.tight = r.lhs == r.rhs;
    r.witness = {Face{arg}};
    return r;
}

/// Σ over the six edges e of the facet σ of f_0(lk e) <= n + 16, for flag weak 3-pseudomanifolds.
inline BoundReport check_facet_edge_sum(const SimplicialComplex& K, Face sigma)
{
    detail::require_flag_weak3(K);
    detail::require_facet(K, sigma);
    return detail::edge_sum_unchecked(K, sigma);
}

/// Σ over the four vertices v of the facet σ of f_0(lk v) <= 2n + 8, for flag weak 3-pseudomanifolds.
inline BoundReport check_facet_vertex_sum(const SimplicialComplex& K, Face sigma)
{
    detail::require_flag_weak3(K);
    detail::require_facet(K, sigma);
    return detail::vertex_sum_unchecked(K, sigma, detail::degrees(K));
}

/// Both facet sums for every facet, validating K once. Reports alternate edge-sum, vertex-sum.
inline std::vector<BoundReport> check_facet_sums(const SimplicialComplex& K)
{
    detail::require_flag_weak3(K);
    const auto deg = detail::degrees(K);
    std::vector<BoundReport> out;
    out.reserve(2 * K.facets().size());
    for (Face sigma : K.facets()) {
        out.push_back(detail::edge_sum_unchecked(K, sigma));
        out.push_back(detail::vertex_sum_unchecked(K, sigma, deg));
    }
    return out;
}

/// One split σ = τ1 ⊔ τ2 of a facet.
struct FacetSplit {
    Face tau1;
    Face tau2;
    Face link1;  ///< V(lk τ1)
    Face link2;  ///< V(lk τ2)
    bool intersection_ok = false;  ///< V(lk τ1) ∩ V(lk τ2) = V(lk σ) (= ∅)
    bool size_ok = false;          ///< f_0(lk τ1) + f_0(lk τ2) <= f_0(K)
    bool covers = false;           ///< V(lk τ1) ∪ V(lk τ2) = V(K)
};

struct DualEdgeReport {
    Face facet;
    bool ridge_links_disjoint = true;
    std::vector<FacetSplit> splits;  ///< τ1 runs over the non-empty proper subsets containing min σ
    Verdict verdict;
};

/// For a facet σ of a flag complex: links of distinct ridges of σ are disjoint, and every split
/// σ = τ1 ⊔ τ2 has V(lk τ1) ∩ V(lk τ2) = V(lk σ) with f_0(lk τ1) + f_0(lk τ2) <= f_0(K).
inline DualEdgeReport check_dual_edge(const SimplicialComplex& K, Face sigma)
{
    detail::require(is_flag(K), "is_flag");
    detail::require_facet(K, sigma);
    DualEdgeReport r;
    r.facet = sigma;
    std::vector<Face> ridges;
    sigma.for_each_vertex([&](Vertex v) { ridges.push_back(sigma.without(v)); });
    std::sort(ridges.begin(), ridges.end());
    for (std::size_t i = 0; i < ridges.size(); ++i)
        for (std::size_t j = i + 1; j < ridges.size(); ++j) {
            const Face common = link_vertices(K, ridges[i]) & link_vertices(K, ridges[j]);
            if (!common.empty() && r.verdict.holds) {
                r.ridge_links_disjoint = false;
                r.verdict = Verdict::no({{ridges[i], ridges[j]}, common.size(), "ridge links intersect"});
            }
        }
    const Face lk_sigma = link_vertices(K, sigma);
    const Face anchor = Face::from_mask(sigma.mask() & (~sigma.mask() + 1));
    std::vector<Face> firsts;
    sigma.for_each_subset([&](Face t) {
        if (!t.empty() && t != sigma && anchor.is_subset_of(t))
            firsts.push_back(t);
    });
    std::sort(firsts.begin(), firsts.end());
    for (Face t1 : firsts) {
        FacetSplit s;
        s.tau1 = t1;
        s.tau2 = sigma - t1;
        s.link1 = link_vertices(K, s.tau1);
        s.link2 = link_vertices(K, s.tau2);
        s.intersection_ok = (s.link1 & s.link2) == lk_sigma;
        s.size_ok = s.link1.size() + s.link2.size() <= static_cast<int>(K.n());
        s.covers = (s.link1 | s.link2) == K.vertex_set();
        if ((!s.intersection_ok || !s.size_ok) && r.verdict.holds)
            r.verdict = Verdict::no({{s.tau1, s.tau2}, s.link1.size() + s.link2.size(),
                                     "split violates the intersection/size property"});
        r.splits.push_back(s);
    }
    return r;
}

struct JoinCriterionReport {
    Face tau1;
    Face tau2;
    bool covers = false;      ///< V(lk τ1) ∪ V(lk τ2) = V(K)
    bool contained = false;   ///< K ⊆ lk τ1 * lk τ2 (meaningful when covers)
    bool equal = false;       ///< K = lk τ1 * lk τ2
    bool normal_pm = false;
    Verdict verdict;
};

/// For a facet τ1 ⊔ τ2 of a flag complex: if the two links cover V(K) then K ⊆ lk τ1 * lk τ2,
/// with equality when K is moreover a normal pseudomanifold.
inline JoinCriterionReport check_join_criterion(const SimplicialComplex& K, Face tau1, Face tau2)
{
    detail::require(is_flag(K), "is_flag");
    if (tau1.empty() || tau2.empty() || tau1.intersects(tau2) || !K.is_facet(tau1 | tau2))
        throw PreconditionError("facet split", "τ1 and τ2 must be disjoint, non-empty, and form a facet");
    JoinCriterionReport r;
    r.tau1 = tau1;
    r.tau2 = tau2;
    r.normal_pm = is_normal_pseudomanifold(K).holds;
    const Subcomplex lk1 = link(K, tau1);
    const Subcomplex lk2 = link(K, tau2);
    const Face V1 = lk1.parent_vertices();
    const Face V2 = lk2.parent_vertices();
    r.covers = (V1 | V2) == K.vertex_set();
    if (!r.covers) {
        r.verdict = Verdict::yes();
        return r;
    }
    // Faces of the join are α ∪ β with α ∈ lk τ1, β ∈ lk τ2 (in the ids of K).
    auto in_link = [](const Subcomplex& lk, Face parent_face) {
        for (Face f : lk.complex.facets())
            if (parent_face.is_subset_of(lk.parent_face(f)))
                return true;
        return false;
    };
    r.contained = !V1.intersects(V2);
    for (Face f : K.facets()) {
        if (!r.contained)
            break;
        r.contained = in_link(lk1, f & V1) && in_link(lk2, f & V2);
    }
    r.equal = r.contained;
    for (Face a : lk1.complex.facets()) {
        for (Face b : lk2.complex.facets())
            if (r.equal && !K.contains(lk1.parent_face(a) | lk2.parent_face(b)))
                r.equal = false;
    }
    if (!r.contained)
        r.verdict = Verdict::no({{tau1, tau2}, 0, "links cover V(K) but K is not contained in their join"});
    else if (r.normal_pm && !r.equal)
        r.verdict = Verdict::no({{tau1, tau2}, 0, "normal pseudomanifold is not the join of the two links"});
    else
        r.verdict = Verdict::yes();
    return r;
}

/// f_i(K) <= f_i(J_m(n)) for every i, for a flag Eulerian (2m-1)-dimensional K. One report per i >= 0.
inline std::vector<BoundReport> check_generic_bound(const SimplicialComplex& K, int m)
{
    if (m < 1 || K.dim() != 2 * m - 1)
        throw PreconditionError("dimension", "generic bound with m = " + std::to_string(m) + " needs dimension " +
                                                 std::to_string(2 * m - 1) + ", got " + std::to_string(K.dim()));
    if (static_cast<int>(K.n()) < 4 * m)
        throw PreconditionError("vertex count", "J_m(n) needs n >= 4m");
    detail::require(is_flag(K), "is_flag");
    detail::require(is_eulerian(K), "is_eulerian");
    const FVector fk = f_vector(K);
    const FVector fj = f_vector(balanced_join(m, static_cast<int>(K.n())));
    std::vector<BoundReport> out;
    for (int i = 0; i <= K.dim(); ++i) {
        BoundReport r{"generic:" + std::to_string(m) + ":f" + std::to_string(i), static_cast<std::int64_t>(K.n()), m};
        r.lhs = fk[i];
        r.rhs = fj[i];
        r.tight = r.lhs == r.rhs;
        out.push_back(std::move(r));
    }
    return out;
}

/// Degree profile and connectivity of edge-maximal flag 3-dimensional Eulerian complexes.
struct EqualityProfile {
    bool maximal = false;  ///< f_1(K) = f_1(J_2(n))
    int low_degree_count = 0;   ///< vertices with f_0(lk v) = ⌊n/2⌋ + 2
    int high_degree_count = 0;  ///< vertices with f_0(lk v) = ⌈n/2⌉ + 2
    bool connected = false;
    bool vertex_links_connected = false;

    /// When maximal: ⌈n/2⌉ low-degree and ⌊n/2⌋ high-degree vertices, everything connected.
    bool holds(std::size_t n) const noexcept
    {
        if (!maximal)
            return true;
        const int lo = static_cast<int>(n / 2);
        const int hi = static_cast<int>(n - n / 2);
        const bool counts = lo == hi ? low_degree_count == static_cast<int>(n)
                                     : (low_degree_count == hi && high_degree_count == lo);
        return counts && connected && vertex_links_connected;
    }
};

inline EqualityProfile equality_profile(const SimplicialComplex& K)
{
    EqualityProfile p;
    const Graph g = one_skeleton(K);
    const auto n = static_cast<std::int64_t>(K.n());
    p.maximal = n >= 8 && static_cast<std::int64_t>(g.edge_count()) == f1_J(2, n);
    const int lo = static_cast<int>(n / 2) + 2;
    const int hi = static_cast<int>(n - n / 2) + 2;
    for (Vertex v = 0; v < K.n(); ++v) {
        p.low_degree_count += g.degree(v) == lo;
        p.high_degree_count += g.degree(v) == hi;
    }
    p.connected = g.component_count() == 1;
    p.vertex_links_connected = true;
    for (Vertex v = 0; v < K.n(); ++v)
        p.vertex_links_connected = p.vertex_links_connected && is_connected(link(K, Face{v}).complex);
    return p;
}

inline constexpr std::string_view kBoundSchema = "flagtop.bound/1";

inline nlohmann::ordered_json to_json(const BoundReport& r)
{
    nlohmann::ordered_json j;
    j["schema"] = kBoundSchema;
    j["bound"] = r.bound_name;
    j["n"] = r.n;
    j["m"] = r.m;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["holds"] = r.holds();
    j["tight"] = r.tight;
    auto w = nlohmann::ordered_json::array();
    for (Face f : r.witness)
        w.push_back(to_json(f));
    j["witness"] = std::move(w);
    if (r.equality_condition)
        j["equality_condition"] = *r.equality_condition;
    return j;
}

inline nlohmann::ordered_json to_json(const DualEdgeReport& r)
{
    nlohmann::ordered_json j;
    j["facet"] = to_json(r.facet);
    j["ridge_links_disjoint"] = r.ridge_links_disjoint;
    auto splits = nlohmann::ordered_json::array();
    for (const auto& s : r.splits) {
        nlohmann::ordered_json js;
        js["tau1"] = to_json(s.tau1);
        js["tau2"] = to_json(s.tau2);
        js["link1_size"] = s.link1.size();
        js["link2_size"] = s.link2.size();
        js["intersection_ok"] = s.intersection_ok;
        js["size_ok"] = s.size_ok;
        js["covers"] = s.covers;
        splits.push_back(std::move(js));
    }
    j["splits"] = std::move(splits);
    j["holds"] = r.verdict.holds;
    return j;
}

inline nlohmann::ordered_json to_json(const JoinCriterionReport& r)
{
    nlohmann::ordered_json j;
    j["tau1"] = to_json(r.tau1);
    j["tau2"] = to_json(r.tau2);
    j["covers"] = r.covers;
    j["contained"] = r.contained;
    j["equal"] = r.equal;
    j["normal_pm"] = r.normal_pm;
    j["holds"] = r.verdict.holds;
    return j;
}

} // namespace flagtop
