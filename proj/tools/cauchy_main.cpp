// Command-line front end: exact verification of the counting identities,
// forward/inverse runs of the main bijection, exhaustive enumeration of both
// sides, and DOT export of quotient trees. JSON in, JSON out, one object per
// line on enumeration streams.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cauchy/identities.hpp"
#include "cauchy/json_io.hpp"

namespace {

using cauchy::BetaTuple;
using cauchy::BigInt;
using cauchy::CauchyParams;
using cauchy::json;
using cauchy::Rational;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBoundExceeded = 3;

int default_jobs() {
    if (const char* env = std::getenv("CAUCHY_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw cauchy::invalid_input("cannot open input file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw cauchy::invalid_input("input is not valid JSON");
    return j;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path == "-") return std::cout;
    file.open(path);
    if (!file) throw cauchy::invalid_input("cannot open output file: " + path);
    return file;
}

// Apply fn to every index in [0, n) on `jobs` threads; fn must only touch
// its own slot of any result vector.
void parallel_indexed(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    int worker_count = std::min(jobs, n);
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w)
        workers.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= n) break;
                fn(i);
            }
        });
    for (auto& t : workers) t.join();
}

BigInt count_alpha_sharded(const CauchyParams& params, int jobs, int max_polygon) {
    cauchy::SignSequence eps = cauchy::epsilon_i(params, params.m());
    if (eps.size() > max_polygon)
        throw cauchy::bound_exceeded("count_alpha: polygon exceeds the bound");
    auto sigmas = cauchy::enumerate_noncrossing_pairings(eps);
    std::vector<BigInt> partial(sigmas.size());
    parallel_indexed(static_cast<int>(sigmas.size()), jobs, [&](int i) {
        partial[static_cast<std::size_t>(i)] = cauchy::count_compatible_orders(
            cauchy::QuotientTree(eps, sigmas[static_cast<std::size_t>(i)]));
    });
    BigInt total;
    for (const auto& p : partial) total += p;
    return total;
}

BigInt expected_alpha_count(const CauchyParams& params) {
    if (params.all_equal())
        return BigInt::pow(params.m(), static_cast<unsigned long long>(
                                           params.m() * params.length(1)));
    return BigInt(static_cast<long long>(cauchy::enumerate_beta(params).size()));
}

int cmd_verify(const std::string& what, const std::vector<int>& lengths, int lmax, int qmax,
               int jobs, int max_polygon) {
    bool all_ok = true;
    auto report = [&](const std::string& line, bool ok) {
        std::cout << line << (ok ? " OK" : " FAIL") << "\n";
        all_ok = all_ok && ok;
    };
    if (what == "m2") {
        for (int l = 1; l <= lmax; ++l) {
            BigInt got = cauchy::cauchy_rhs_m2(l);
            BigInt want = BigInt::pow(4, static_cast<unsigned>(l));
            report("m2 l=" + std::to_string(l) + ": sum=" + got.to_string() +
                       " expected=" + want.to_string(),
                   got == want);
        }
    } else if (what == "m3") {
        for (int l = 1; l <= lmax; ++l) {
            BigInt got = cauchy::cauchy_rhs_m3(l);
            BigInt want = BigInt::pow(27, static_cast<unsigned>(l));
            report("m3 l=" + std::to_string(l) + ": sum=" + got.to_string() +
                       " expected=" + want.to_string(),
                   got == want);
        }
    } else if (what == "cauchy") {
        CauchyParams params(lengths);
        BigInt got = count_alpha_sharded(params, jobs, max_polygon);
        BigInt want = expected_alpha_count(params);
        report("cauchy l=" + [&] {
                   std::string s;
                   for (std::size_t i = 0; i < lengths.size(); ++i)
                       s += (i ? "," : "") + std::to_string(lengths[i]);
                   return s;
               }() + ": count=" + got.to_string() + " expected=" + want.to_string(),
               got == want);
    } else if (what == "moments") {
        CauchyParams params(lengths);
        if (!params.all_equal())
            throw cauchy::invalid_input("moments: requires equal block lengths");
        int l = params.length(1), m = params.m();
        Rational got(count_alpha_sharded(params, jobs, max_polygon),
                     BigInt::factorial(static_cast<unsigned>(m * l + 1)));
        Rational want(BigInt::pow(m, static_cast<unsigned long long>(m) * l),
                      BigInt::factorial(static_cast<unsigned>(m * l + 1)));
        report("moment l=" + std::to_string(l) + " m=" + std::to_string(m) + ": " +
                   got.to_string() + " expected=" + want.to_string(),
               got == want);
    } else if (what == "pitman") {
        for (int q = 0; q <= qmax; ++q) {
            std::set<std::vector<int>> images;
            long long domain = 0, target = 0;
            for (int mask = 0; mask < (1 << (2 * q)); ++mask) {
                std::vector<int> steps;
                int sum = 0, run = 0, low = 0;
                for (int i = 0; i < 2 * q; ++i) {
                    int s = (mask >> i) & 1 ? 1 : -1;
                    steps.push_back(s);
                    sum += s;
                    run += s;
                    low = std::min(low, run);
                }
                if (low >= 0) ++target;
                if (sum != 0) continue;
                ++domain;
                images.insert(cauchy::pitman_transform(cauchy::PathSequence(steps)).entries());
            }
            bool image_ok = true;
            for (const auto& img : images) {
                int run = 0;
                for (int e : img) {
                    run += e;
                    if (run < 0) image_ok = false;
                }
            }
            report("pitman 2q=" + std::to_string(2 * q) + ": domain=" + std::to_string(domain) +
                       " image=" + std::to_string(images.size()) +
                       " targets=" + std::to_string(target) + " bijection",
                   image_ok && static_cast<long long>(images.size()) == domain &&
                       domain == target);
        }
    } else {
        throw cauchy::invalid_input("verify: unknown identity " + what);
    }
    return all_ok ? 0 : kExitVerifyFailed;
}

int cmd_map(const std::vector<int>& lengths, const std::string& input,
            const std::string& output, bool emit_gamma, const std::string& trace_path) {
    CauchyParams params(lengths);
    auto alpha = cauchy::alpha_from_json(read_input(input), params);
    std::ofstream trace_file;
    cauchy::TraceSink sink = nullptr;
    if (!trace_path.empty()) {
        trace_file.open(trace_path);
        if (!trace_file) throw cauchy::invalid_input("cannot open trace file: " + trace_path);
        sink = [&trace_file](const cauchy::RewriteTrace& tr) {
            trace_file << cauchy::trace_to_json(tr).dump() << "\n";
        };
    }
    BetaTuple beta = cauchy::main_bijection(alpha, params, sink);
    json out = cauchy::to_json(beta);
    if (emit_gamma) out["gamma"] = cauchy::beta_to_gamma(beta, params);
    std::ofstream file;
    open_output(file, output) << out.dump() << "\n";
    return 0;
}

int cmd_invert(const std::vector<int>& lengths, const std::string& input,
               const std::string& output, const std::string& trace_path) {
    CauchyParams params(lengths);
    json j = read_input(input);
    BetaTuple beta =
        j.contains("B") ? cauchy::beta_from_json(j)
                        : cauchy::gamma_to_beta(j.get<std::vector<int>>(), params);
    std::ofstream trace_file;
    cauchy::TraceSink sink = nullptr;
    if (!trace_path.empty()) {
        trace_file.open(trace_path);
        if (!trace_file) throw cauchy::invalid_input("cannot open trace file: " + trace_path);
        sink = [&trace_file](const cauchy::RewriteTrace& tr) {
            trace_file << cauchy::trace_to_json(tr).dump() << "\n";
        };
    }
    auto alpha = cauchy::main_bijection_inverse(beta, params, sink);
    std::ofstream file;
    open_output(file, output)
        << cauchy::to_json(cauchy::epsilon_i(params, params.m()), alpha).dump() << "\n";
    return 0;
}

int cmd_enumerate(const std::vector<int>& lengths, const std::string& side,
                  const std::string& output, int jobs, long long bound) {
    CauchyParams params(lengths);
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    if (side == "beta" || side == "gamma") {
        for (const auto& b : cauchy::enumerate_beta(params, bound)) {
            if (side == "beta")
                os << cauchy::to_json(b).dump() << "\n";
            else
                os << json(cauchy::beta_to_gamma(b, params)).dump() << "\n";
        }
        return 0;
    }
    if (side != "alpha") throw cauchy::invalid_input("enumerate: unknown side " + side);
    cauchy::SignSequence eps = cauchy::epsilon_i(params, params.m());
    auto sigmas = cauchy::enumerate_noncrossing_pairings(eps);
    std::vector<std::string> chunks(sigmas.size());
    parallel_indexed(static_cast<int>(sigmas.size()), jobs, [&](int i) {
        const auto& sigma = sigmas[static_cast<std::size_t>(i)];
        cauchy::QuotientTree t(eps, sigma);
        std::string lines;
        for (auto& ranks : cauchy::enumerate_compatible_orders(t, bound)) {
            lines += cauchy::to_json(eps, cauchy::AlphaElement{sigma, std::move(ranks)}).dump();
            lines += "\n";
        }
        chunks[static_cast<std::size_t>(i)] = std::move(lines);
    });
    for (const auto& c : chunks) os << c;  // merged in pairing order
    return 0;
}

int cmd_export_dot(const std::vector<int>& lengths, const std::string& input,
                   const std::string& output) {
    json j = read_input(input);
    if (!j.is_object() || !j.contains("pairs"))
        throw cauchy::invalid_input("export-dot: expected an alpha element or tree object");
    cauchy::SignSequence eps = j.contains("epsilon")
                                   ? cauchy::sign_sequence_from_json(j.at("epsilon"))
                                   : cauchy::epsilon_i(CauchyParams(lengths),
                                                       CauchyParams(lengths).m());
    cauchy::QuotientTree t(eps, cauchy::pairing_from_json(j.at("pairs")));
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    if (j.contains("order")) {
        std::vector<int> order = j.at("order").get<std::vector<int>>();
        if (static_cast<int>(order.size()) != t.vertex_count())
            throw cauchy::invalid_input("export-dot: order length does not match the tree");
        os << cauchy::export_dot(t, &order);
    } else {
        os << cauchy::export_dot(t);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quotient-tree bijections for the generalized Cauchy identities"};
    app.require_subcommand(1);

    std::vector<int> lengths;
    std::string input = "-";
    std::string output = "-";
    std::string trace_path;
    int jobs = default_jobs();
    int lmax = 6;
    int qmax = 6;
    int max_polygon = 26;
    long long bound = 1000000;

    auto add_common = [&](CLI::App* cmd, bool needs_l) {
        auto* opt = cmd->add_option("--l", lengths, "block lengths l_1,...,l_m (weakly increasing)")
                        ->delimiter(',');
        if (needs_l) opt->required();
        cmd->add_option("--jobs", jobs, "worker threads for enumeration workloads");
        cmd->add_option("--output", output, "output path, - for stdout");
    };

    auto* verify = app.add_subcommand("verify", "check a family of identities exactly");
    std::string what;
    verify->add_option("--what", what, "one of m2, m3, cauchy, moments, pitman")->required();
    add_common(verify, false);
    verify->add_option("--lmax", lmax, "largest l for the m2/m3 sweeps");
    verify->add_option("--qmax", qmax, "largest q for the pitman sweep");
    verify->add_option("--max-polygon", max_polygon, "largest polygon size accepted");

    auto* map = app.add_subcommand("map", "alpha element JSON -> beta tuple JSON");
    add_common(map, true);
    map->add_option("--input", input, "alpha element JSON path, - for stdin");
    bool emit_gamma = false;
    map->add_flag("--gamma", emit_gamma, "also emit the parking-function encoding");
    map->add_option("--trace", trace_path, "write rewrite trace JSON lines to this file");

    auto* invert = app.add_subcommand("invert", "beta tuple JSON -> alpha element JSON");
    add_common(invert, true);
    invert->add_option("--input", input, "beta tuple JSON path, - for stdin");
    invert->add_option("--trace", trace_path, "write rewrite trace JSON lines to this file");

    auto* enumerate = app.add_subcommand("enumerate", "stream one side as JSON lines");
    std::string side;
    enumerate->add_option("--side", side, "alpha, beta or gamma")->required();
    add_common(enumerate, true);
    enumerate->add_option("--bound", bound, "abort beyond this many elements");

    auto* export_dot = app.add_subcommand("export-dot", "render a tree or alpha element as DOT");
    add_common(export_dot, false);
    export_dot->add_option("--input", input, "alpha element or tree JSON path, - for stdin");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if ((what == "cauchy" || what == "moments") && lengths.empty())
                throw cauchy::invalid_input("verify --what " + what + " requires --l");
            return cmd_verify(what, lengths, lmax, qmax, jobs, max_polygon);
        }
        if (map->parsed()) return cmd_map(lengths, input, output, emit_gamma, trace_path);
        if (invert->parsed()) return cmd_invert(lengths, input, output, trace_path);
        if (enumerate->parsed()) return cmd_enumerate(lengths, side, output, jobs, bound);
        if (export_dot->parsed()) return cmd_export_dot(lengths, input, output);
    } catch (const cauchy::bound_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBoundExceeded;
    } catch (const cauchy::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return 0;
}
