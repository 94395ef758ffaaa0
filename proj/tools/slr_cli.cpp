// Command-line front end for the shifted Littlewood–Richardson library.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "slr/slr.hpp"

namespace {

using namespace slr;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kDisagree = 2, kInternal = 3 };

struct Options {
    std::string format = "text";
    std::string cache_path;
    std::string lambda, mu, nu;
    std::string word;
    std::string tops;
    std::string mode = "mixed";
    bool witnesses = false;
    int max_size = 7;
    std::string oracles = "monomial,rectification,completion";
    double budget_ms = 0;
    int family = 0;
    bool no_oracle = false;
};

bool structured(const Options& o) { return o.format == "structured"; }

LetterWord parse_letters(const std::string& text) {
    LetterWord w;
    if (text.empty()) return w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        bool p = !tok.empty() && tok.back() == '\'';
        if (p) tok.pop_back();
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || std::stoi(tok) <= 0)
            throw ValidationError("malformed word token '" + tok + (p ? "'" : "") + "'");
        w.push_back({std::stoi(tok), p});
    }
    return w;
}

Word parse_word(const std::string& text) {
    Word w;
    for (Letter x : parse_letters(text)) {
        if (x.p) throw ValidationError("primed letter '" + x.str() + "' not allowed here");
        w.push_back(x.v);
    }
    return w;
}

std::unique_ptr<CoefficientCache> open_cache(const Options& o) {
    if (!o.cache_path.empty()) return std::make_unique<CoefficientCache>(o.cache_path);
    if (auto p = CoefficientCache::path_from_env()) return std::make_unique<CoefficientCache>(*p);
    return nullptr;
}

int cmd_coeff(const Options& o) {
    auto lambda = parse_partition(o.lambda), mu = parse_partition(o.mu), nu = parse_partition(o.nu);
    auto cache = open_cache(o);
    std::vector<LabeledTableau> found;
    std::uint64_t b;
    if (o.witnesses) {
        found = enumerate_constructed(lambda, mu, nu);
        b = found.size();
        if (cache && b > 0) cache->put(cache_key(lambda, mu, nu), b);
    } else {
        b = coefficient(lambda, mu, nu, cache.get());
    }
    if (cache) cache->save();
    if (structured(o)) {
        json j = {{"lambda", lambda.str()}, {"mu", mu.str()}, {"nu", nu.str()}, {"coefficient", b}};
        if (o.witnesses) {
            j["witnesses"] = json::array();
            for (const auto& t : found) j["witnesses"].push_back({{"tableau", to_structured(t.tableau)}, {"labels", t.labels}});
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << b << "\n";
        for (const auto& t : found) std::cout << to_text(t.tableau) << "\n  " << t.label_text() << "\n";
    }
    return kOk;
}

int cmd_expand(const Options& o) {
    auto lambda = parse_partition(o.lambda), mu = parse_partition(o.mu);
    auto cache = open_cache(o);
    auto terms = expand_product(lambda, mu, cache.get());
    if (cache) cache->save();
    if (structured(o)) {
        json j = json::array();
        for (const auto& [nu, b] : terms) j.push_back({{"nu", nu.str()}, {"coefficient", b}});
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [nu, b] : terms) std::cout << nu.str() << ": " << b << "\n";
    }
    return kOk;
}

int cmd_insert(const Options& o) {
    InsertionResult r;
    if (o.mode == "mixed") {
        Word w = parse_word(o.word);
        if (o.tops.empty()) {
            r = mixed_insertion(w);
        } else {
            Word tops = parse_word(o.tops);
            if (tops.size() != w.size()) throw ValidationError("top and bottom rows differ in length");
            Biword b;
            for (std::size_t i = 0; i < w.size(); ++i) b.push_back({tops[i], unprimed(w[i])});
            r = mixed_insertion(sorted_by_top(b));
        }
    } else if (o.mode == "sw") {
        LetterWord w = parse_letters(o.word);
        Biword b;
        Word tops = o.tops.empty() ? Word{} : parse_word(o.tops);
        if (!tops.empty() && tops.size() != w.size()) throw ValidationError("top and bottom rows differ in length");
        for (std::size_t i = 0; i < w.size(); ++i) b.push_back({tops.empty() ? static_cast<int>(i) + 1 : tops[i], w[i]});
        r = sw_insertion(sorted_by_top(b));
    } else {
        throw ValidationError("unknown mode '" + o.mode + "'");
    }
    if (structured(o)) {
        std::cout << json{{"P", to_structured(r.p)}, {"Q", to_structured(r.q)}}.dump() << "\n";
    } else {
        std::cout << "P = " << to_text(r.p) << "\n" << "Q = " << to_text(r.q) << "\n";
    }
    return kOk;
}

int cmd_check(const Options& o) {
    Word w = parse_word(o.word);
    auto nu = partition_from_content(word_content(w));
    bool by = is_barely_yamanouchi(w);
    if (by != is_barely_yamanouchi_slow(w)) {
        std::cerr << "internal: fast and insertion-based barely Yamanouchi tests disagree\n";
        return kInternal;
    }
    json runs = json::array();
    for (const auto& r : shrinking_decomposition(w)) runs.push_back({{"top", r.top}, {"bottom", r.bottom}, {"positions", r.positions}});
    json j = {{"yamanouchi", is_yamanouchi(w)},
              {"shifted_lattice", is_shifted_lattice(w)},
              {"interlacing", is_interlacing(w)},
              {"barely_yamanouchi", by},
              {"nu", nu ? json(nu->str()) : json(nullptr)},
              {"runs", runs},
              {"hook_profile", hook_lengths_by_shape(w)}};
    if (structured(o)) {
        std::cout << j.dump() << "\n";
        return kOk;
    }
    for (const char* k : {"yamanouchi", "shifted_lattice", "interlacing", "barely_yamanouchi"})
        std::cout << k << ": " << (j[k].get<bool>() ? "true" : "false") << "\n";
    std::cout << "nu: " << (nu ? nu->str() : "none") << "\n";
    std::cout << "runs:";
    for (const auto& r : shrinking_decomposition(w)) std::cout << " " << r.top << ".." << r.bottom;
    std::cout << "\nhook_profile:";
    for (int x : hook_lengths_by_shape(w)) std::cout << " " << x;
    std::cout << "\n";
    return kOk;
}

int cmd_verify(const Options& o) {
    std::set<std::string> use;
    {
        std::stringstream ss(o.oracles);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok != "monomial" && tok != "rectification" && tok != "completion")
                throw ValidationError("unknown oracle '" + tok + "'");
            use.insert(tok);
        }
    }
    if (o.max_size < 0 || o.max_size > 14) throw ValidationError("--max must lie in 0..14");
    MonomialOracle mono;
    std::size_t triples = 0, disagreements = 0;
    json report = json::array();
    for (int s = 0; s <= o.max_size; ++s)
        for (const auto& nu : strict_partitions_of(s))
            for (int a = 0; a <= s; ++a)
                for (const auto& lambda : strict_partitions_of(a))
                    for (const auto& mu : strict_partitions_of(s - a)) {
                        ++triples;
                        long long rule = static_cast<long long>(coefficient_uncached(lambda, mu, nu));
                        json rec = {{"lambda", lambda.str()}, {"mu", mu.str()}, {"nu", nu.str()}, {"new_rule", rule}};
                        bool agree = true;
                        auto check = [&](const char* name, long long v) {
                            rec[name] = v;
                            agree = agree && v == rule;
                        };
                        if (use.count("monomial")) check("monomial", mono.coefficient(lambda, mu, nu));
                        if (use.count("rectification")) check("rectification", coeff_by_rectification(lambda, mu, nu));
                        if (use.count("completion")) check("completion", coeff_by_completion(lambda, mu, nu));
                        rec["agree"] = agree;
                        if (structured(o)) {
                            report.push_back(rec);
                        } else {
                            std::cout << cache_key(lambda, mu, nu) << " rule=" << rule;
                            for (const char* k : {"monomial", "rectification", "completion"})
                                if (rec.contains(k)) std::cout << " " << k << "=" << rec[k].get<long long>();
                            std::cout << (agree ? " agree" : " DISAGREE") << "\n";
                        }
                        if (!agree) {
                            ++disagreements;
                            if (disagreements == 1) std::cerr << "first counterexample: " << rec.dump() << "\n";
                        }
                    }
    if (structured(o))
        std::cout << json{{"triples", triples}, {"disagreements", disagreements}, {"report", report}}.dump() << "\n";
    else
        std::cout << triples << " triples, " << disagreements << " disagreements\n";
    return disagreements ? kDisagree : kOk;
}

int cmd_bench(const Options& o) {
    std::vector<std::tuple<StrictPartition, StrictPartition, StrictPartition>> inst;
    if (o.family > 0) {
        for (int k = 1; k <= o.family; ++k) inst.push_back(staircase_shift(k));
    } else {
        inst.emplace_back(parse_partition(o.lambda), parse_partition(o.mu), parse_partition(o.nu));
    }
    std::optional<double> budget;
    if (o.budget_ms > 0) budget = o.budget_ms;
    for (const auto& [l, m, n] : inst) {
        auto rec = bench_compare(l, m, n, !o.no_oracle, budget);
        std::cout << rec.to_json().dump() << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shifted Littlewood-Richardson coefficients"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--cache", o.cache_path, "coefficient cache file (default: $SLR_CACHE)");

    auto add_triple = [&](CLI::App* sub, bool with_nu) {
        sub->add_option("-l,--lambda", o.lambda, "partition λ, e.g. 8,7,4")->required();
        sub->add_option("-m,--mu", o.mu, "partition μ (\"\" or - for empty)")->required();
        if (with_nu) sub->add_option("-n,--nu", o.nu, "partition ν")->required();
    };

    auto* coeff = app.add_subcommand("coeff", "coefficient b^ν_{λ,μ}");
    add_triple(coeff, true);
    coeff->add_flag("--witnesses", o.witnesses, "print the constructed tableaux");

    auto* expand = app.add_subcommand("expand", "expand P_λ P_μ over the P basis");
    add_triple(expand, false);

    auto* insert = app.add_subcommand("insert", "mixed or Sagan-Worley insertion");
    insert->add_option("--mode", o.mode, "mixed or sw")->check(CLI::IsMember({"mixed", "sw"}));
    insert->add_option("-w,--word", o.word, "comma-separated letters (sw accepts primes)")->required();
    insert->add_option("--top", o.tops, "top row of a biword");

    auto* check = app.add_subcommand("check", "word diagnosis");
    check->add_option("-w,--word", o.word, "comma-separated letters")->required();

    auto* verify = app.add_subcommand("verify", "cross-check the rule against the oracles");
    verify->add_option("--max", o.max_size, "largest |ν|");
    verify->add_option("--oracles", o.oracles, "comma list of monomial,rectification,completion");
    verify->add_option("--budget-ms", o.budget_ms, "unused for verify; accepted for symmetry");

    auto* bench = app.add_subcommand("bench", "node counts of the rule against the rectification oracle");
    bench->add_option("-l,--lambda", o.lambda, "partition λ");
    bench->add_option("-m,--mu", o.mu, "partition μ");
    bench->add_option("-n,--nu", o.nu, "partition ν");
    bench->add_option("--family", o.family, "staircase-shift instances k = 1..K");
    bench->add_option("--budget-ms", o.budget_ms, "time budget of the oracle leg");
    bench->add_flag("--no-oracle", o.no_oracle, "skip the oracle leg");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*coeff) return cmd_coeff(o);
        if (*expand) return cmd_expand(o);
        if (*insert) return cmd_insert(o);
        if (*check) return cmd_check(o);
        if (*verify) return cmd_verify(o);
        if (*bench) {
            if (o.family <= 0 && (o.lambda.empty() || o.nu.empty())) throw ValidationError("bench needs -l/-m/-n or --family");
            return cmd_bench(o);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DecodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConsistencyFailure& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
