// flagtop: construct, validate and count flag simplicial complexes.
//
// Exit codes: 0 ok, 1 violation / negative answer, 2 usage, file or precondition errors.
#include "flagtop/flagtop.hpp"

#include <CLI11.hpp>
#include "json.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace flagtop;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

// Raised for bad input files; carries the path for the message.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SimplicialComplex load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(path + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_complex(buf.str());
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError(path + ": cannot write");
    out << text;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson with_schema(std::string_view schema, ojson body)
{
    ojson j;
    j["schema"] = schema;
    for (auto& [k, v] : body.items())
        j[k] = v;
    return j;
}

std::string fvector_text(const FVector& f)
{
    std::string s = "(";
    for (std::size_t i = 0; i < f.counts().size(); ++i)
        s += (i ? "," : "") + std::to_string(f.counts()[i]);
    return s + ")";
}

class Stopwatch {
public:
    explicit Stopwatch(std::string what) : what_(std::move(what)) {}
    ~Stopwatch()
    {
        const std::chrono::duration<double> d = std::chrono::steady_clock::now() - t0_;
        std::cerr << what_ << ": " << std::fixed << std::setprecision(2) << d.count() << " s\n";
    }

private:
    std::string what_;
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
    std::string kind;
    int k = 0, m = 0, n = 0, d = 0;
    std::vector<int> a, b, l;
    bool allow_any_sums = false;
    std::string out;
    bool json = false;
};

SimplicialComplex build(const ConstructArgs& c)
{
    auto need = [&](int value, const char* flag) {
        if (value <= 0)
            throw CLI::ValidationError(std::string("construct ") + c.kind + " requires " + flag);
        return value;
    };
    if (c.kind == "cycle")
        return cycle(need(c.k, "--k"));
    if (c.kind == "j")
        return balanced_join(need(c.m, "--m"), need(c.n, "--n"));
    if (c.kind == "jstar")
        return suspended_join(need(c.m, "--m"), need(c.n, "--n"));
    if (c.kind == "cross")
        return cross_polytope_boundary(need(c.d, "--d"));
    if (c.kind == "gj") {
        if (c.a.empty() || c.b.empty())
            throw CLI::ValidationError("construct gj requires --a and --b");
        return gj({c.a, c.b}, {c.allow_any_sums});
    }
    if (c.l.size() != 4)
        throw CLI::ValidationError("construct remark requires --l with four lengths");
    return remark_complex(c.l[0], c.l[1], c.l[2], c.l[3]);
}

int run_construct(const ConstructArgs& c)
{
    const auto K = build(c);
    write_text(c.out, c.json ? dump(with_schema("flagtop.complex/1", to_json(K))) : format_facets(K));
    return kOk;
}

// ---- validate / fvector ----------------------------------------------------

int run_validate(const std::string& file, const std::vector<std::string>& require, bool json)
{
    const auto K = load(file);
    const auto r = classify(K);
    bool ok = true;
    for (const auto& name : require)
        ok = ok && r.holds(name);
    if (json) {
        std::cout << dump(to_json(r));
        return ok ? kOk : kViolation;
    }
    std::cout << "n = " << r.n << ", dim = " << r.dim << ", f = " << fvector_text(r.f) << "\n";
    std::cout << std::left << std::setw(20) << "class" << std::setw(7) << "holds" << "witness\n";
    for (auto name : ClassificationReport::kNames) {
        const auto& v = r[name];
        std::cout << std::setw(20) << name;
        if (v.holds || !v.witness) {
            std::cout << (v.holds ? "yes" : "no");
        } else {
            std::cout << std::setw(7) << "no";
            std::string faces;
            for (Face f : v.witness->faces)
                faces += (faces.empty() ? "" : " ") + f.to_string();
            std::cout << v.witness->detail << (faces.empty() ? "" : " [" + faces + "]");
        }
        std::cout << "\n";
    }
    return ok ? kOk : kViolation;
}

int run_fvector(const std::string& file, bool json)
{
    const auto K = load(file);
    const auto f = f_vector(K);
    if (json) {
        ojson j;
        j["n"] = K.n();
        j["dim"] = K.dim();
        j["f_vector"] = to_json(f);
        j["reduced_euler_characteristic"] = f.reduced_euler_char();
        std::cout << dump(with_schema("flagtop.fvector/1", std::move(j)));
    } else {
        std::cout << fvector_text(f) << "\n";
    }
    return kOk;
}

// ---- bound-check -----------------------------------------------------------

std::vector<BoundReport> check(const SimplicialComplex& K, const std::string& theorem)
{
    if (theorem == "3dim")
        return {check_upper_bound_3dim(K)};
    if (theorem == "c-bound")
        return {check_lemma_c_bound(K)};
    if (theorem == "facet-sums")
        return check_facet_sums(K);
    if (theorem.rfind("generic:", 0) == 0) {
        int m = 0;
        try {
            m = std::stoi(theorem.substr(8));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--theorem generic:m needs an integer m");
        }
        return check_generic_bound(K, m);
    }
    throw CLI::ValidationError("unknown theorem '" + theorem + "'");
}

int run_bound_check(const std::string& file, const std::string& theorem)
{
    const auto K = load(file);
    const auto reports = check(K, theorem);
    auto arr = ojson::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
        ok = ok && r.holds();
    }
    std::cout << dump(arr);
    return ok ? kOk : kViolation;
}

// ---- enumerate -------------------------------------------------------------

int run_enumerate(int n, const std::string& cls_name, std::optional<std::int64_t> f1, const std::string& out_dir,
                  bool json, unsigned threads)
{
    const auto cls = parse_complex_class(cls_name);
    EnumerationResult r;
    {
        Stopwatch sw("enumerate n=" + std::to_string(n) + " " + cls_name);
        r = enumerate_class(n, cls, {f1, threads});
    }
    const auto summary = to_json(r);
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (std::size_t i = 0; i < r.count(); ++i) {
            std::ostringstream name;
            name << "rep_" << std::setw(3) << std::setfill('0') << i << ".txt";
            write_text((fs::path(out_dir) / name.str()).string(), format_facets(r.representatives[i]));
        }
        write_text((fs::path(out_dir) / "summary.json").string(), dump(summary));
    }
    if (json) {
        std::cout << dump(summary);
        return kOk;
    }
    std::cout << r.count() << " classes of " << cls_name << " on " << n << " vertices (" << r.candidates
              << " candidate graphs)\n";
    for (std::size_t i = 0; i < r.count(); ++i)
        std::cout << "  " << i << "  f = " << fvector_text(r.f_vectors[i]) << "\n";
    return kOk;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& suite_name, bool json, unsigned threads)
{
    const auto criteria = suite(suite_name);
    std::vector<CriterionResult> results;
    bool ok = true;
    for (const auto& c : criteria) {
        results.push_back(run_criterion(c, threads));
        const auto& r = results.back();
        ok = ok && r.ok();
        if (json)
            std::cerr << r.id << ": " << detail::fmt_seconds(r.seconds) << "\n";
        else
            std::cout << format_line(r) << std::endl;
    }
    if (json)
        std::cout << dump(to_json(suite_name, results));
    return ok ? kOk : kViolation;
}

// ---- iso -------------------------------------------------------------------

int run_iso(const std::string& a, const std::string& b, bool json)
{
    const bool iso = are_isomorphic(load(a), load(b));
    if (json) {
        ojson j;
        j["isomorphic"] = iso;
        std::cout << dump(with_schema("flagtop.iso/1", std::move(j)));
    } else {
        std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    }
    return iso ? kOk : kViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Flag simplicial complexes: constructions, validators, bounds and enumeration"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (overrides FLAGTOP_THREADS; 0 = automatic)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Write a standard complex in the facet format");
    construct->add_option("kind", ca.kind, "cycle | j | jstar | cross | gj | remark")
        ->required()
        ->check(CLI::IsMember({"cycle", "j", "jstar", "cross", "gj", "remark"}));
    construct->add_option("--k", ca.k, "Cycle length");
    construct->add_option("--m", ca.m, "Number of circles");
    construct->add_option("--n", ca.n, "Number of vertices");
    construct->add_option("--d", ca.d, "Cross-polytope dimension");
    construct->add_option("--a", ca.a, "GJ circle lengths, first side")->delimiter(',');
    construct->add_option("--b", ca.b, "GJ circle lengths, second side")->delimiter(',');
    construct->add_option("--l", ca.l, "Circle lengths l1,l2,l3,l4 of the non-normal example")->delimiter(',');
    construct->add_flag("--allow-any-sums", ca.allow_any_sums, "Accept GJ parts with arbitrary sums");
    construct->add_option("--out,-o", ca.out, "Output file (default stdout)");
    construct->add_flag("--json", ca.json, "Write the JSON format");

    std::string file;
    std::vector<std::string> require;
    bool json = false;
    auto* validate = app.add_subcommand("validate", "Classify a complex");
    validate->add_option("file", file)->required();
    validate->add_option("--require", require, "Exit 1 unless these classes hold")
        ->check(CLI::IsMember(std::vector<std::string>(ClassificationReport::kNames.begin(),
                                                       ClassificationReport::kNames.end())));
    validate->add_flag("--json", json);

    auto* fvec = app.add_subcommand("fvector", "Print the f-vector");
    fvec->add_option("file", file)->required();
    fvec->add_flag("--json", json);

    std::string theorem;
    auto* bound = app.add_subcommand("bound-check", "Evaluate a bound; prints a JSON report array");
    bound->add_option("file", file)->required();
    bound->add_option("--theorem", theorem, "3dim | c-bound | facet-sums | generic:m")->required();
    bound->add_flag("--json", json, "Accepted for uniformity; output is always JSON");

    int n = 0;
    std::string cls;
    std::optional<std::int64_t> f1;
    std::string out_dir;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate a class up to isomorphism (8 <= n <= 11)");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--class", cls, "flag_normal_3pm | flag_eulerian_3 | flag_3_manifold")->required();
    enumerate->add_option("--f1", f1, "Keep only complexes with this many edges");
    enumerate->add_option("--out", out_dir, "Directory for representatives and summary.json");
    enumerate->add_flag("--json", json);

    std::string suite_name = "paper-core";
    auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
    verify->add_option("--suite", suite_name, "paper-core | quick");
    verify->add_flag("--json", json);

    std::string other;
    auto* iso = app.add_subcommand("iso", "Test two flag complexes for isomorphism");
    iso->add_option("a", file)->required();
    iso->add_option("b", other)->required();
    iso->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*construct)
            return run_construct(ca);
        if (*validate)
            return run_validate(file, require, json);
        if (*fvec)
            return run_fvector(file, json);
        if (*bound)
            return run_bound_check(file, theorem);
        if (*enumerate)
            return run_enumerate(n, cls, f1, out_dir, json, threads);
        if (*verify)
            return run_verify(suite_name, json, threads);
        if (*iso)
            return run_iso(file, other, json);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
