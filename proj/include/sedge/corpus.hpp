#pragma once

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sedge/enumerate.hpp"
#include "sedge/harness.hpp"

namespace sedge {

inline nlohmann::json report_to_json(const verification_report& rep, bool with_timing = false) {
    nlohmann::json j;
    j["graph"] = rep.graph_id;
    j["n"] = rep.subject.n;
    j["m"] = rep.subject.m();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : rep.subject.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    auto checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["status"] = to_string(c.status);
        if (!c.witness.empty()) cj["witness"] = c.witness;
        if (with_timing) cj["millis"] = c.millis;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

struct corpus_result {
    std::vector<verification_report> reports;
    std::vector<check_result> corpus_checks;

    bool all_passed() const {
        for (const auto& r : reports)
            if (!r.all_passed()) return false;
        for (const auto& c : corpus_checks)
            if (c.status == check_status::fail) return false;
        return true;
    }
};

namespace detail {

inline const std::vector<long long>& connected_class_counts() {
    static const std::vector<long long> counts{1, 1, 2, 6, 21, 112, 853};
    return counts;
}

} // namespace detail

// Verifies every connected isomorphism class with up to n_max vertices and
// appends the corpus-level checks (class counts, injectivity of the
// symmetric edge construction).
inline corpus_result run_corpus(int n_max, const harness_options& opt = {}, int jobs = 1) {
    corpus_result result;
    auto graphs = enumerate_connected(n_max);
    result.reports.resize(graphs.size());

    if (jobs < 1) jobs = 1;
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= graphs.size()) break;
            result.reports[i] = check_suite(graphs[i], opt);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    {
        check_result c;
        c.name = "corpus_class_counts";
        std::map<int, long long> by_n;
        for (const auto& g : graphs) ++by_n[g.n];
        c.status = check_status::pass;
        for (int n = 1; n <= n_max; ++n) {
            long long want = detail::connected_class_counts()[n - 1];
            if (by_n[n] != want) {
                c.status = check_status::fail;
                c.witness = "n=" + std::to_string(n) + ": found " + std::to_string(by_n[n]) +
                            " classes, expected " + std::to_string(want);
                break;
            }
        }
        result.corpus_checks.push_back(std::move(c));
    }

    {
        check_result c;
        c.name = "symmetric_edge_injectivity";
        c.status = check_status::pass;
        // bucket the images by cheap invariants; only bucket collisions need
        // an isomorphism search
        std::map<std::string, std::vector<std::size_t>> buckets;
        std::vector<graph> images(graphs.size());
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (!is_connected(graphs[i])) continue;
            images[i] = symmetric_edge_graph(graphs[i]);
            auto deg = degrees(images[i]);
            std::sort(deg.begin(), deg.end());
            std::ostringstream key;
            key << images[i].n << ':' << images[i].m() << ':';
            for (int d : deg) key << d << ',';
            key << ':' << to_human(char_poly(adjacency_matrix(images[i])));
            buckets[key.str()].push_back(i);
        }
        for (const auto& [key, members] : buckets) {
            for (std::size_t a = 0; a < members.size() && c.status == check_status::pass; ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    if (are_isomorphic(images[members[a]], images[members[b]],
                                       iso_options{opt.iso_bound})) {
                        c.status = check_status::fail;
                        c.witness = "distinct classes " + result.reports[members[a]].graph_id +
                                    " and " + result.reports[members[b]].graph_id +
                                    " have isomorphic images";
                        break;
                    }
                }
        }
        result.corpus_checks.push_back(std::move(c));
    }

    return result;
}

inline std::string corpus_summary(const corpus_result& result) {
    std::map<std::string, std::array<long long, 3>> table;  // pass, fail, skip
    for (const auto& r : result.reports)
        for (const auto& c : r.checks) {
            auto& row = table[c.name];
            if (c.status == check_status::pass) ++row[0];
            else if (c.status == check_status::fail) ++row[1];
            else ++row[2];
        }
    std::ostringstream os;
    os << "graphs verified: " << result.reports.size() << "\n";
    std::size_t width = 12;
    for (const auto& [name, row] : table) width = std::max(width, name.size());
    os << std::left;
    os.width(static_cast<std::streamsize>(width));
    os << "check";
    os << "  pass  fail  skip\n";
    long long failures = 0;
    for (const auto& [name, row] : table) {
        os.width(static_cast<std::streamsize>(width));
        os << name;
        os << "  " << row[0] << "  " << row[1] << "  " << row[2] << "\n";
        failures += row[1];
    }
    for (const auto& c : result.corpus_checks) {
        os.width(static_cast<std::streamsize>(width));
        os << c.name;
        if (c.status == check_status::fail) {
            os << "  fail: " << c.witness << "\n";
            ++failures;
        } else {
            os << "  " << to_string(c.status) << "\n";
        }
    }
    os << "failures: " << failures << "\n";
    return os.str();
}

} // namespace sedge
