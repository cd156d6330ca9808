// Command-line surface for the parking-function polytope library.
//
// Scalar subcommands print a single JSON report (or one CSV row); the
// vertices/edges subcommands stream one JSON line per item. Every numeric
// result is serialized as a string so exact values survive any JSON
// consumer; small coordinate tuples in the dump formats stay native.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 resource bound exceeded.

#include "parkhull/dump.hpp"
#include "parkhull/face_oracle.hpp"
#include "parkhull/faces.hpp"
#include "parkhull/lattice.hpp"
#include "parkhull/polytope.hpp"
#include "parkhull/volume.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace parkhull;

using Clock = std::chrono::steady_clock;

std::string elapsed_ms_since(Clock::time_point start) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return std::to_string(ms.count());
}

struct OutputOptions {
    std::string format = "json";
};

void emit_report(const json& report, const OutputOptions& out) {
    if (out.format == "json") {
        std::cout << report.dump() << "\n";
        return;
    }
    // csv: one header line and one row, flattening any array values
    std::string header;
    std::string row;
    for (const auto& [key, value] : report.items()) {
        if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (!header.empty()) {
                    header += ',';
                    row += ',';
                }
                header += key + std::to_string(i);
                row += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
            }
        } else {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += key;
            row += value.is_string() ? value.get<std::string>() : value.dump();
        }
    }
    std::cout << header << "\n" << row << "\n";
}

json tuple_json(const std::vector<int>& t) {
    json a = json::array();
    for (int v : t) a.push_back(v);
    return a;
}

// ---- verify -------------------------------------------------------------

struct CheckResult {
    std::string name;
    std::string status; // pass | fail | skipped
    std::string reason;
    std::string counterexample;
};

CheckResult skipped(const std::string& name, const std::string& reason) {
    return CheckResult{name, "skipped", reason, ""};
}

CheckResult outcome(const std::string& name, bool ok, const std::string& counterexample) {
    if (ok) return CheckResult{name, "pass", "", ""};
    return CheckResult{name, "fail", "", counterexample};
}

std::vector<CheckResult> run_verification(int n, const std::string& level, const ScanOptions& opts) {
    std::vector<CheckResult> results;
    const bool full = (level == "full");

    // closed-form identities on the f-vector
    if (n <= 12) {
        const auto f = f_vector(n);
        const BigInt v = vertex_count(n);
        results.push_back(outcome("f0_equals_vertex_count", f[0] == v,
                                  "f0=" + f[0].str() + " vertex_count=" + v.str()));
        results.push_back(outcome("f1_equals_nV_over_2", 2 * f[1] == n * v,
                                  "f1=" + f[1].str() + " nV/2=" + BigInt(n * v / 2).str()));
        const BigInt facets = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n)) - 1;
        results.push_back(outcome("facet_count_is_2n_minus_1", f[n - 1] == facets,
                                  "f" + std::to_string(n - 1) + "=" + f[n - 1].str()));
        BigInt euler{0};
        for (int i = 0; i < n; ++i) euler += (i % 2 == 0) ? f[i] : -f[i];
        const BigInt expected = (n % 2 == 0) ? BigInt(0) : BigInt(2);
        results.push_back(outcome("euler_relation", euler == expected,
                                  "alternating sum " + euler.str() + " expected " + expected.str()));
    } else {
        results.push_back(skipped("f_vector_identities", "resource bound"));
    }

    {
        const auto rep = egf_identity_check(10);
        std::string residual = "residual [";
        for (std::size_t i = 0; i <= rep.residual.order(); ++i)
            residual += (i ? "," : "") + rational_string(rep.residual[i]);
        residual += "]";
        results.push_back(outcome("egf_identity_order_10", rep.equal, residual));
    }

    auto oracle_check = [&](const std::string& name, int max_n, auto&& body) {
        if (n > max_n) {
            results.push_back(skipped(name, "resource bound"));
            return;
        }
        if (!full) {
            results.push_back(skipped(name, "fast level"));
            return;
        }
        results.push_back(body());
    };

    oracle_check("graph_regularity", 7, [&] {
        const EdgeGraph g = edge_graph(n);
        const BigInt expected_edges = edge_count(n);
        if (BigInt(g.edge_count()) != expected_edges)
            return outcome("graph_regularity", false,
                           "edges " + std::to_string(g.edge_count()) + " expected " + expected_edges.str());
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            if (static_cast<int>(g.adjacency[i].size()) != n)
                return outcome("graph_regularity", false,
                               "vertex " + vertex_json_line(g.vertices[i]) + " has degree " +
                                   std::to_string(g.adjacency[i].size()));
            for (std::int32_t u : g.adjacency[i])
                if (std::abs(g.vertices[i].layer - g.vertices[u].layer) > 1)
                    return outcome("graph_regularity", false,
                                   "edge across layers: " + vertex_json_line(g.vertices[i]) + " " +
                                       vertex_json_line(g.vertices[u]));
        }
        return outcome("graph_regularity", true, "");
    });

    oracle_check("face_oracle_f_vector", 5, [&] {
        const auto oracle = face_lattice_oracle(n);
        const auto f = f_vector(n);
        for (int d = 0; d < n; ++d) {
            const auto it = oracle.find(d);
            const BigInt got = (it == oracle.end()) ? BigInt(0) : BigInt(it->second.size());
            if (got != f[d])
                return outcome("face_oracle_f_vector", false,
                               "dimension " + std::to_string(d) + ": oracle " + got.str() +
                                   " formula " + f[d].str());
        }
        return outcome("face_oracle_f_vector", true, "");
    });

    oracle_check("face_descriptor_bijection", 5, [&] {
        const auto oracle = face_lattice_oracle(n);
        const auto verts = polytope_vertices(n);
        std::map<std::vector<int>, std::uint32_t> index;
        for (std::uint32_t i = 0; i < verts.size(); ++i) index.emplace(verts[i].entries, i);
        for (int d = 0; d < n; ++d) {
            std::set<VertexIndexSet> described;
            for (const auto& fd : enumerate_faces(n, d)) {
                VertexIndexSet s;
                for (const auto& v : face_vertices(fd, n)) s.push_back(index.at(v));
                std::sort(s.begin(), s.end());
                if (!described.insert(std::move(s)).second)
                    return outcome("face_descriptor_bijection", false,
                                   "duplicate vertex set in dimension " + std::to_string(d));
            }
            const auto it = oracle.find(d);
            const std::set<VertexIndexSet> empty;
            const auto& truth = (it == oracle.end()) ? empty : it->second;
            if (described != truth)
                return outcome("face_descriptor_bijection", false,
                               "dimension " + std::to_string(d) + ": " +
                                   std::to_string(described.size()) + " descriptors vs " +
                                   std::to_string(truth.size()) + " oracle faces");
        }
        return outcome("face_descriptor_bijection", true, "");
    });

    oracle_check("volume_oracle_match", 5, [&] {
        const BigRational direct = volume(static_cast<std::size_t>(n));
        const BigRational interpolated = volume_oracle(n, opts);
        return outcome("volume_oracle_match", direct == interpolated,
                       "recurrence " + rational_string(direct) + " interpolation " +
                           rational_string(interpolated));
    });

    oracle_check("lattice_closed_equals_bruteforce", 5, [&] {
        const BigInt closed = lattice_count(n, CountMethod::closed, opts);
        const BigInt brute = lattice_count(n, CountMethod::bruteforce, opts);
        return outcome("lattice_closed_equals_bruteforce", closed == brute,
                       "closed " + closed.str() + " bruteforce " + brute.str());
    });

    oracle_check("slice_counts_match", 5, [&] {
        for (long long S = n; S <= static_cast<long long>(n) * (n + 1) / 2; ++S) {
            const BigInt closed = postnikov_slice_count(n, S);
            const BigInt brute = slice_count_bruteforce(n, S);
            if (closed != brute)
                return outcome("slice_counts_match", false,
                               "S=" + std::to_string(S) + ": closed " + closed.str() +
                                   " bruteforce " + brute.str());
        }
        return outcome("slice_counts_match", true, "");
    });

    return results;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry of the parking-function polytope"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    OutputOptions out;
    ScanOptions scan;
    if (const char* env = std::getenv("PARKHULL_BUDGET")) scan.point_budget = std::strtoull(env, nullptr, 10);

    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--shards", scan.shards, "parallel shards for brute-force scans")
        ->check(CLI::Range(1, 1024));
    app.add_option("--budget", scan.point_budget,
                   "max points a brute-force scan may visit (env PARKHULL_BUDGET)");

    int n = 0;
    int m = 0;
    long long s = 0;
    std::string method = "closed";
    std::string level = "full";

    auto* cmd_fvector = app.add_subcommand("fvector", "face numbers (f_0..f_{n-1})");
    cmd_fvector->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, 30));

    auto* cmd_volume = app.add_subcommand("volume", "exact volume");
    cmd_volume->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, 30));

    auto* cmd_lattice = app.add_subcommand("lattice", "number of integer points");
    cmd_lattice->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, 30));
    cmd_lattice->add_option("--method", method, "closed or bruteforce")
        ->check(CLI::IsMember({"closed", "bruteforce"}))
        ->capture_default_str();

    auto* cmd_vertices = app.add_subcommand("vertices", "vertex dump, one JSON line each");
    cmd_vertices->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, 30));

    auto* cmd_edges = app.add_subcommand("edges", "edge dump, one JSON line each");
    cmd_edges->add_option("--n", n, "dimension")->required()->check(CLI::Range(2, 30));

    auto* cmd_ehrhart = app.add_subcommand("ehrhart", "integer points of the m-fold dilation");
    cmd_ehrhart->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, 30));
    cmd_ehrhart->add_option("--m", m, "dilation factor")->required()->check(CLI::Range(0, 1000000));

    auto* cmd_slice = app.add_subcommand("slice", "slice decomposition and both counts");
    cmd_slice->add_option("--n", n, "dimension")->required()->check(CLI::Range(1, 30));
    cmd_slice->add_option("--s", s, "coordinate sum level")->required();

    auto* cmd_verify = app.add_subcommand("verify", "cross-check formulas against oracles");
    cmd_verify->add_option("--n", n, "dimension")->required()->check(CLI::Range(2, 30));
    cmd_verify->add_option("--level", level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto start = Clock::now();
    try {
        if (cmd_fvector->parsed()) {
            json report;
            report["command"] = "fvector";
            report["n"] = std::to_string(n);
            json f = json::array();
            for (const BigInt& fi : f_vector(n)) f.push_back(fi.str());
            report["f"] = f;
            report["method"] = "formula";
            report["elapsed_ms"] = elapsed_ms_since(start);
            emit_report(report, out);
        } else if (cmd_volume->parsed()) {
            json report;
            report["command"] = "volume";
            report["n"] = std::to_string(n);
            report["volume"] = rational_string(volume(static_cast<std::size_t>(n)));
            report["method"] = "formula";
            report["elapsed_ms"] = elapsed_ms_since(start);
            emit_report(report, out);
        } else if (cmd_lattice->parsed()) {
            const CountMethod cm = (method == "closed") ? CountMethod::closed : CountMethod::bruteforce;
            const BigInt count = lattice_count(n, cm, scan);
            json report;
            report["command"] = "lattice";
            report["n"] = std::to_string(n);
            report["count"] = count.str();
            report["method"] = method;
            report["provenance"] = (cm == CountMethod::closed) ? "formula" : "oracle";
            report["elapsed_ms"] = elapsed_ms_since(start);
            emit_report(report, out);
        } else if (cmd_vertices->parsed()) {
            if (out.format == "csv") {
                std::string header;
                for (int i = 1; i <= n; ++i) header += "v" + std::to_string(i) + ",";
                std::cout << header << "layer\n";
                for_each_vertex(n, [&](const std::vector<int>& v, int layer) {
                    std::string row;
                    for (int c : v) row += std::to_string(c) + ",";
                    std::cout << row << layer << "\n";
                });
            } else {
                for_each_vertex(n, [&](const std::vector<int>& v, int layer) {
                    std::cout << vertex_json_line(Vertex{v, layer}) << "\n";
                });
            }
        } else if (cmd_edges->parsed()) {
            const EdgeGraph g = edge_graph(n);
            std::string header;
            if (out.format == "csv") {
                for (int i = 1; i <= n; ++i) header += "a" + std::to_string(i) + ",";
                for (int i = 1; i <= n; ++i) header += "b" + std::to_string(i) + (i == n ? "" : ",");
                std::cout << header << "\n";
            }
            for (std::size_t i = 0; i < g.vertices.size(); ++i) {
                for (std::int32_t u : g.adjacency[i]) {
                    if (static_cast<std::size_t>(u) <= i) continue; // each edge once
                    if (out.format == "csv") {
                        std::string row;
                        for (int c : g.vertices[i].entries) row += std::to_string(c) + ",";
                        for (std::size_t t = 0; t < g.vertices[u].entries.size(); ++t)
                            row += std::to_string(g.vertices[u].entries[t]) +
                                   (t + 1 == g.vertices[u].entries.size() ? "" : ",");
                        std::cout << row << "\n";
                    } else {
                        std::cout << edge_json_line(std::span<const int>(g.vertices[i].entries),
                                                    std::span<const int>(g.vertices[u].entries))
                                  << "\n";
                    }
                }
            }
        } else if (cmd_ehrhart->parsed()) {
            const BigInt count = ehrhart_count(n, m, scan);
            json report;
            report["command"] = "ehrhart";
            report["n"] = std::to_string(n);
            report["m"] = std::to_string(m);
            report["count"] = count.str();
            report["method"] = "oracle";
            report["elapsed_ms"] = elapsed_ms_since(start);
            emit_report(report, out);
        } else if (cmd_slice->parsed()) {
            const SliceSpec spec = slice_spec(n, s);
            json report;
            report["command"] = "slice";
            report["n"] = std::to_string(n);
            report["s"] = std::to_string(s);
            report["kind"] = spec.all_ones ? "all_ones" : "pair";
            if (!spec.all_ones) {
                report["r"] = std::to_string(spec.r);
                report["k"] = std::to_string(spec.k);
            }
            report["vertex_type"] = tuple_json(slice_vertex_type(spec));
            report["closed"] = postnikov_slice_count(n, s).str();
            report["bruteforce"] = slice_count_bruteforce(n, s).str();
            report["elapsed_ms"] = elapsed_ms_since(start);
            emit_report(report, out);
        } else if (cmd_verify->parsed()) {
            const auto checks = run_verification(n, level, scan);
            bool all_ok = true;
            json arr = json::array();
            for (const auto& c : checks) {
                json item;
                item["name"] = c.name;
                item["status"] = c.status;
                if (!c.reason.empty()) item["reason"] = c.reason;
                if (c.status == "fail") {
                    all_ok = false;
                    item["counterexample"] = c.counterexample;
                }
                arr.push_back(item);
            }
            if (out.format == "csv") {
                std::cout << "check,status,reason\n";
                for (const auto& c : checks)
                    std::cout << c.name << "," << c.status << "," << c.reason << "\n";
            } else {
                json report;
                report["command"] = "verify";
                report["n"] = std::to_string(n);
                report["level"] = level;
                report["checks"] = arr;
                report["ok"] = all_ok ? "true" : "false";
                report["elapsed_ms"] = elapsed_ms_since(start);
                emit_report(report, out);
            }
            return all_ok ? 0 : 1;
        }
    } catch (const ResourceBoundError& e) {
        json err;
        err["error"] = "resource bound";
        err["method"] = e.method();
        err["detail"] = e.what();
        std::cout << err.dump() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
