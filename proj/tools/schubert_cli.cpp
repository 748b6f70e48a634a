// Command-line front end: presentations, class products, Pieri expansions,
// Giambelli evaluations, and structure-constant tables, with deterministic
// text or JSON output.
//
// Exit codes: 0 success, 2 usage error, 3 computation error.

#include "schubert/schubert.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace schubert;

class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

bool is_reserved_name(const std::string& name) {
    if (name == "X") return true;
    if (name.size() < 2) return false;
    if (name[0] != 'T' && name[0] != 'D') return false;
    if (name[1] == '0') return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

/// "name:degree,name:degree,..."; empty string declares the plain ring Z.
RingPtr parse_ring_decl(const std::string& src) {
    std::vector<Generator> gens;
    std::size_t pos = 0;
    while (pos < src.size()) {
        std::size_t comma = src.find(',', pos);
        std::string item = src.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw usage_error("--ring entries must look like name:degree, got '" + item + "'");
        std::string name = item.substr(0, colon);
        std::string deg = item.substr(colon + 1);
        if (deg.empty() || deg.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("--ring degree must be a non-negative integer, got '" + deg + "'");
        if (is_reserved_name(name))
            throw usage_error("generator name '" + name + "' is reserved");
        gens.push_back({name, std::stoi(deg)});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return RingDecl::make(std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("--ring: ") + e.what());
    }
}

/// Builds M(p) from the --p value: a keyword or a polynomial in X.
SpecPtr build_spec(int n, const std::string& p_src, RingPtr ring) {
    if (p_src == "classical") {
        std::vector<CoeffPoly> coeffs(static_cast<std::size_t>(n), CoeffPoly::zero(ring));
        return ModuleSpec::finite(n, std::move(coeffs), std::move(ring));
    }
    if (p_src == "quantum") {
        if (ring->find("q"))
            throw usage_error("--p quantum declares 'q' itself; remove it from --ring");
        std::vector<Generator> gens(ring->generators());
        gens.push_back({"q", n});
        RingPtr extended = RingDecl::make(std::move(gens));
        std::vector<CoeffPoly> coeffs(static_cast<std::size_t>(n), CoeffPoly::zero(extended));
        coeffs.back() = CoeffPoly::generator(extended, "q");
        return ModuleSpec::finite(n, std::move(coeffs), std::move(extended));
    }
    std::vector<Generator> xgens;
    xgens.push_back({"X", 1});
    for (const auto& g : ring->generators()) xgens.push_back(g);
    RingPtr xring = RingDecl::make(std::move(xgens));
    CoeffPoly parsed = poly_parse(p_src, xring);
    // Split off the X powers; generator 0 of xring is X.
    std::vector<CoeffPoly> bucket(static_cast<std::size_t>(n) + 1, CoeffPoly::zero(ring));
    for (const auto& [m, c] : parsed.terms()) {
        int e = m.exponent(0);
        if (e > n)
            throw std::invalid_argument("p has degree > n in X");
        std::vector<std::pair<int, int>> rest;
        for (const auto& [g, exp] : m.factors())
            if (g != 0) rest.emplace_back(g - 1, exp);
        bucket[static_cast<std::size_t>(e)].add_term(Monomial(std::move(rest)), c);
    }
    if (!bucket[static_cast<std::size_t>(n)].is_one())
        throw std::invalid_argument("p must be monic of degree n in X");
    std::vector<CoeffPoly> coeffs;
    for (int i = 1; i <= n; ++i) coeffs.push_back(bucket[static_cast<std::size_t>(n - i)]);
    return ModuleSpec::finite(n, std::move(coeffs), std::move(ring));
}

struct Config {
    int k = 0;
    int n = 0;
    std::string p = "classical";
    std::string ring;
    std::string format = "text";
    std::string output;
    std::string lhs;
    std::string rhs;
    std::string cls;
    int order = 0;
    int max_weight = 0;
};

void add_common(CLI::App* cmd, Config& cfg) {
    cmd->add_option("-k", cfg.k, "exterior power (1 <= k <= n)")->required();
    cmd->add_option("-n", cfg.n, "rank of M(p)")->required();
    cmd->add_option("--p", cfg.p, "polynomial in X, or 'classical' (X^n) or 'quantum' (X^n + q)");
    cmd->add_option("--ring", cfg.ring, "coefficient generators, 'name:degree,...'");
    cmd->add_option("--format", cfg.format, "text or json");
    cmd->add_option("--output", cfg.output, "write the document here instead of stdout");
}

int emit(const std::string& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << doc;
    if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
    return 0;
}

std::string product_text(const std::string& left, const ClassCombination& result) {
    return left + " = " + result.str() + "\n";
}

int run(const std::string& command, const Config& cfg) {
    if (cfg.format != "text" && cfg.format != "json")
        throw usage_error("--format must be text or json");
    if (cfg.n < 1 || cfg.k < 1 || cfg.k > cfg.n)
        throw usage_error("need 1 <= k <= n");
    RingPtr base = parse_ring_decl(cfg.ring);
    SpecPtr spec = build_spec(cfg.n, cfg.p, base);
    std::string doc;
    if (command == "present") {
        PresentationResult pres = presentation(spec, cfg.k);
        doc = cfg.format == "text" ? pres.text() : to_json(pres).dump(2) + "\n";
    } else if (command == "multiply") {
        SchubertClass a(Partition::parse(cfg.lhs), cfg.k, spec);
        SchubertClass b(Partition::parse(cfg.rhs), cfg.k, spec);
        ClassCombination result = multiply_classes(a, b);
        if (cfg.format == "text") {
            doc = product_text(a.str() + " * " + b.str(), result);
        } else {
            ordered_json j;
            j["lhs"] = a.partition().str();
            j["rhs"] = b.partition().str();
            j["result"] = to_json(result);
            doc = j.dump(2) + "\n";
        }
    } else if (command == "pieri") {
        if (cfg.order < 0) throw usage_error("--order must be >= 0");
        SchubertClass b(Partition::parse(cfg.cls), cfg.k, spec);
        ClassCombination result = pieri_on_class(cfg.order, b);
        if (cfg.format == "text") {
            doc = product_text("D_" + std::to_string(cfg.order) + " " + b.str(), result);
        } else {
            ordered_json j;
            j["order"] = cfg.order;
            j["class"] = b.partition().str();
            j["result"] = to_json(result);
            doc = j.dump(2) + "\n";
        }
    } else if (command == "giambelli") {
        Partition lambda = Partition::parse(cfg.cls);
        IndexTuple I = partition_to_index(lambda, cfg.k);
        CoeffPoly delta = schur_delta(I);
        MultiVector v = giambelli_vector(I, spec);
        if (cfg.format == "text") {
            std::ostringstream os;
            os << "class: σ(" << lambda.str() << ")\n";
            os << "indices: (" << I.str() << ")\n";
            os << "delta: " << delta.str() << "\n";
            os << "vector: " << v.str() << "\n";
            doc = os.str();
        } else {
            ordered_json j;
            j["class"] = lambda.str();
            j["indices"] = I.indices();
            j["delta"] = delta.str();
            j["vector"] = to_json(v);
            doc = j.dump(2) + "\n";
        }
    } else if (command == "constants") {
        if (cfg.max_weight < 0) throw usage_error("--max-weight must be >= 0");
        std::vector<ProductEntry> table = structure_constants(spec, cfg.k, cfg.max_weight);
        if (cfg.format == "text") {
            std::ostringstream os;
            for (const auto& e : table)
                os << "σ(" << e.lhs.str() << ") * σ(" << e.rhs.str() << ") = "
                   << e.result.str() << "\n";
            doc = os.str();
        } else {
            doc = to_json(table).dump(2) + "\n";
        }
    }
    return emit(doc, cfg.output);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert calculus on exterior powers of M(p) via Hasse-Schmidt derivations"};
    app.require_subcommand(1);
    Config cfg;

    CLI::App* present = app.add_subcommand("present", "generators and relations of A*(/\\^k M(p))");
    add_common(present, cfg);

    CLI::App* multiply = app.add_subcommand("multiply", "product of two Schubert classes");
    add_common(multiply, cfg);
    multiply->add_option("--lhs", cfg.lhs, "left partition, e.g. '2,1'")->required();
    multiply->add_option("--rhs", cfg.rhs, "right partition")->required();

    CLI::App* pieri = app.add_subcommand("pieri", "apply D_h to a Schubert class");
    add_common(pieri, cfg);
    pieri->add_option("--order", cfg.order, "derivation order h")->required();
    pieri->add_option("--class", cfg.cls, "partition to act on")->required();

    CLI::App* giambelli = app.add_subcommand("giambelli", "Schur determinant and wedge vector of a class");
    add_common(giambelli, cfg);
    giambelli->add_option("--class", cfg.cls, "partition to expand")->required();

    CLI::App* constants = app.add_subcommand("constants", "structure-constant table up to a weight bound");
    add_common(constants, cfg);
    constants->add_option("--max-weight", cfg.max_weight, "bound on |lhs| + |rhs|")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), cfg);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
