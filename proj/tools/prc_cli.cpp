// Operator surface: seeded subcommands over key generation, encoding,
// decoding, the four attacks, the cost estimator, the parameter advisor, and
// the channel simulators. Every run writes a manifest next to its outputs.
//
// Exit codes: 0 success, 1 usage error, 2 attack reported FAILURE,
// 3 I/O or format error.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prc/attack_mitm.hpp"
#include "prc/attack_overlay.hpp"
#include "prc/attack_pkfree.hpp"
#include "prc/attack_weakkey.hpp"
#include "prc/channel_sim.hpp"
#include "prc/complexity.hpp"
#include "prc/io.hpp"
#include "prc/ldpc.hpp"

using namespace prc;

namespace {

constexpr const char* TOOL_VERSION = "1.0.0";

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

nlohmann::json params_json(const PrcParams& p) {
    return {{"scheme", scheme_name(p.scheme)}, {"n", p.n},      {"r", p.r},
            {"g", p.g},                        {"t", p.t},      {"lambda", p.lambda},
            {"omega", p.omega}};
}

void write_manifest(const std::string& base, const std::string& sub, const nlohmann::json& params,
                    uint64_t seed, const std::string& started) {
    nlohmann::json m = {{"subcommand", sub},      {"params", params},
                        {"seed", seed},           {"version", TOOL_VERSION},
                        {"started", started},     {"finished", iso_now()}};
    detail::write_all(base + ".manifest.json", m.dump(2) + "\n");
}

void write_report(const std::string& path, const AttackReport& rep) {
    detail::write_all(path, rep.to_json().dump(2) + "\n");
    std::cout << rep.attack << ": " << rep.verdict;
    if (!rep.failure_reason.empty()) std::cout << " (" << rep.failure_reason << ")";
    std::cout << "\n";
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct KeygenOpts {
    std::string scheme = "revised";
    uint32_t n = 0, t = 3;
    double omega = 0.0;
    uint64_t seed = 0;
    std::string out;
};

struct EncodeOpts {
    std::string pk;
    uint32_t count = 1;
    double omega = -1.0;  // <0 keeps the key's rate
    uint64_t seed = 0;
    std::string out;
};

struct DecodeOpts {
    std::string sk;
    std::string in;
};

struct Attack1Opts {
    std::string pk, targets, out = "attack1.report";
    uint64_t l1_size = 0;
    double tau = 0.0;  // 0 = per-t default
    double l = 1.0;
    uint32_t threads = 1;
    uint64_t seed = 0;
};

struct Attack2Opts {
    std::string pk_dir, targets, out = "attack2.report";
    double tau = 0.60;
};

struct Attack3Opts {
    std::string pk, sk, target, out = "attack3.report";
    double mu = 0.0;
    uint64_t max_iters = 100000;
    uint32_t threads = 1;
    uint64_t seed = 0;
};

struct Attack4Opts {
    std::string targets, out = "attack4.report";
    uint32_t weight = 3;
    uint64_t n_times = 0;
    double tau1 = 0.0;
    uint64_t tau2 = 0;
    double omega = 0.0;
    uint64_t seed = 0;
};

struct EstimateOpts {
    std::string scheme = "llm";
    uint32_t t_min = 3, t_max = 0;  // 0 = scheme maximum
    uint64_t n = 0;                 // 0 = published table length
    std::string out;
};

struct AdviseOpts {
    std::string scheme = "llm";
    double bits = 128.0;
};

struct SimulateOpts {
    std::string channel = "llm";
    double entropy = 1e9;
    double sigma = 0.0;
    uint32_t count = 4096;
    uint64_t seed = 0;
};

int run_keygen(const KeygenOpts& o) {
    std::string started = iso_now();
    PrcParams p = PrcParams::configured(scheme_from_name(o.scheme), o.n, o.t, o.omega);
    KeyPair kp = keygen(p, o.seed);
    write_key_files(o.out, kp, p);
    write_manifest(o.out, "keygen", params_json(p), o.seed, started);
    std::cout << "wrote " << o.out << ".pk and " << o.out << ".sk\n";
    return 0;
}

int run_encode(const EncodeOpts& o) {
    std::string started = iso_now();
    auto [pk, p] = read_public_key(o.pk);
    if (o.omega >= 0.0) p.omega = o.omega;
    p.validate();
    Rng rng(o.seed);
    std::vector<Codeword> cws;
    cws.reserve(o.count);
    for (uint32_t i = 0; i < o.count; ++i) cws.push_back(encode(pk, p, rng.split(i).seed()).first);
    detail::write_all(o.out, serialize_codewords(cws, p.n));
    write_manifest(o.out, "encode", params_json(p), o.seed, started);
    std::cout << "wrote " << o.count << " codewords to " << o.out << "\n";
    return 0;
}

int run_decode(const DecodeOpts& o) {
    std::string started = iso_now();
    auto [sk, p] = read_secret_key(o.sk);
    auto cws = deserialize_codewords(detail::read_all(o.in));
    size_t accepted = 0;
    for (size_t i = 0; i < cws.size(); ++i) {
        bool acc = decode(sk, p, cws[i]) == DecodeResult::ACCEPT;
        accepted += acc;
        std::cout << i << ": " << (acc ? "ACCEPT" : "REJECT") << "\n";
    }
    std::cout << "accepted " << accepted << "/" << cws.size() << "\n";
    write_manifest(o.in + ".decode", "decode", params_json(p), 0, started);
    return 0;
}

int run_attack1(const Attack1Opts& o) {
    std::string started = iso_now();
    auto t0 = std::chrono::steady_clock::now();
    auto [pk, p] = read_public_key(o.pk);
    auto targets = deserialize_codewords(detail::read_all(o.targets));
    double tau = o.tau;
    if (tau <= 0.0) tau = p.t == 3 ? 0.60 : p.t == 4 ? 0.55
                                   : 0.5 * (0.5 + zero_ratio_mean(p.omega, p.t));
    AttackReport rep;
    rep.attack = "attack1-collision-search";
    rep.seed = o.seed;
    rep.params = params_json(p);
    rep.params["tau"] = tau;
    rep.params["l"] = o.l;
    write_manifest(o.out, "attack1", rep.params, o.seed, started);
    MitmConfig cfg = mitm_config_for_target(p.n, p.r, p.t, o.l, tau);
    if (o.l1_size) cfg.list_cap_1 = o.l1_size;
    auto [l1, l2] = build_half_lists(pk.G, p.t, cfg, o.seed);
    RecoveredDual rec = merge_join(l1, l2, pk.G);
    rep.counters = {{"list1", l1.size()}, {"list2", l2.size()}, {"recovered", rec.vectors.size()}};
    if (rec.vectors.empty()) {
        rep.verdict = "FAILURE";
        rep.failure_reason = "no dual vectors recovered; re-run with larger caps or l";
        rep.wall_time_ms = ms_since(t0);
        write_report(o.out + ".json", rep);
        return 2;
    }
    DistinguisherVerdict v = distinguish(rec, pk.z, targets, tau);
    rep.counters["n_zero"] = v.n_zero;
    rep.counters["n_tot"] = v.n_tot;
    rep.counters["ratio"] = v.ratio;
    rep.verdict = v.verdict ? "watermarked" : "not-watermarked";
    rep.wall_time_ms = ms_since(t0);
    write_report(o.out + ".json", rep);
    return 0;
}

int run_attack2(const Attack2Opts& o) {
    std::string started = iso_now();
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> files;
    for (const auto& ent : std::filesystem::directory_iterator(o.pk_dir))
        if (ent.path().extension() == ".pk") files.push_back(ent.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("attack2: no .pk files in " + o.pk_dir);
    std::vector<PublicKey> keys;
    PrcParams p;
    for (const auto& f : files) {
        auto [pk, pp] = read_public_key(f);
        keys.push_back(std::move(pk));
        p = pp;
    }
    AttackReport rep;
    rep.attack = "attack2-weak-key-scan";
    rep.params = params_json(p);
    rep.params["keys"] = files.size();
    rep.params["tau"] = o.tau;
    write_manifest(o.out, "attack2", rep.params, 0, started);
    WeakKeyScan scan = multi_target_scan(keys);
    rep.counters = {{"scanned", files.size()}};
    if (!scan.index) {
        rep.verdict = "FAILURE";
        rep.failure_reason = "no weak key in batch";
        rep.wall_time_ms = ms_since(t0);
        write_report(o.out + ".json", rep);
        return 2;
    }
    rep.counters["weak_key_index"] = *scan.index;
    rep.counters["duplicate_pairs"] = scan.pairs.pairs.size();
    auto targets = deserialize_codewords(detail::read_all(o.targets));
    DistinguisherVerdict v =
        distinguish_by_pairs(scan.pairs, keys[*scan.index].z, targets, o.tau);
    rep.counters["n_zero"] = v.n_zero;
    rep.counters["n_tot"] = v.n_tot;
    rep.counters["ratio"] = v.ratio;
    rep.verdict = v.verdict ? "watermarked" : "not-watermarked";
    rep.wall_time_ms = ms_since(t0);
    write_report(o.out + ".json", rep);
    return 0;
}

int run_attack3(const Attack3Opts& o) {
    std::string started = iso_now();
    auto t0 = std::chrono::steady_clock::now();
    auto [pk, p] = read_public_key(o.pk);
    auto targets = deserialize_codewords(detail::read_all(o.target));
    if (targets.empty()) throw InvariantError("attack3: empty target file");
    AttackReport rep;
    rep.attack = "attack3-noise-overlay";
    rep.seed = o.seed;
    rep.params = params_json(p);
    rep.params["max_iters"] = o.max_iters;
    write_manifest(o.out, "attack3", rep.params, o.seed, started);
    OverlayConfig cfg;
    cfg.mu = o.mu;
    cfg.max_iters = o.max_iters;
    cfg.threads = o.threads;
    std::optional<SecretKey> sk;
    if (!o.sk.empty()) sk = read_secret_key(o.sk).first;
    try {
        OverlayOutcome out = overlay_attack(pk, p, targets.front(), cfg, o.seed);
        rep.counters = {{"isd_iterations", out.isd_iterations},
                        {"recovered_weight", out.recovered_e.weight()},
                        {"overlay_weight", out.overlay.weight()},
                        {"mu", out.mu}};
        if (sk) {
            rep.counters["decode_original"] =
                decode(*sk, p, targets.front()) == DecodeResult::ACCEPT ? "ACCEPT" : "REJECT";
            rep.counters["decode_attacked"] =
                decode(*sk, p, out.attacked) == DecodeResult::ACCEPT ? "ACCEPT" : "REJECT";
        }
        detail::write_all(o.out + ".attacked", serialize_codewords({out.attacked}, p.n));
        rep.verdict = "overlay-applied";
        rep.wall_time_ms = ms_since(t0);
        write_report(o.out + ".json", rep);
        return 0;
    } catch (const std::runtime_error& e) {
        rep.verdict = "FAILURE";
        rep.failure_reason = e.what();
        rep.wall_time_ms = ms_since(t0);
        write_report(o.out + ".json", rep);
        return 2;
    }
}

int run_attack4(const Attack4Opts& o) {
    std::string started = iso_now();
    auto t0 = std::chrono::steady_clock::now();
    auto targets = deserialize_codewords(detail::read_all(o.targets));
    PkFreeConfig cfg;
    cfg.weight = o.weight;
    cfg.n_times = o.n_times;
    cfg.tau1 = o.tau1;
    cfg.tau2 = o.tau2;
    cfg.omega = o.omega;
    AttackReport rep;
    rep.attack = o.weight == 2 ? "attack5-pair-parity" : "attack4-sparse-parity";
    rep.seed = o.seed;
    rep.params = {{"targets", targets.size()}, {"weight", o.weight},
                  {"tau1", cfg.tau1},          {"tau2", cfg.tau2},
                  {"omega", cfg.omega}};
    write_manifest(o.out, "attack4", rep.params, o.seed, started);
    PkFreeVerdict v = pkfree_distinguish(targets, cfg, o.seed);
    rep.counters = {{"s_counter", v.s_counter}, {"n_times", v.n_times}, {"tau1", v.tau1}};
    rep.verdict = v.verdict ? "watermarked" : "not-watermarked";
    rep.wall_time_ms = ms_since(t0);
    write_report(o.out + ".json", rep);
    return 0;
}

int run_estimate(const EstimateOpts& o) {
    std::string started = iso_now();
    Scheme scheme = scheme_from_name(o.scheme);
    uint32_t t_max = o.t_max ? o.t_max : (scheme == Scheme::GIM ? 7 : 14);
    auto rows = emit_table(scheme, o.t_min, t_max, o.n);
    std::string csv = table_to_csv(scheme, rows);
    std::cout << csv;
    if (!o.out.empty()) {
        detail::write_all(o.out, csv);
        write_manifest(o.out, "estimate",
                       {{"scheme", o.scheme}, {"t_min", o.t_min}, {"t_max", t_max}}, 0, started);
    } else {
        write_manifest("estimate", "estimate",
                       {{"scheme", o.scheme}, {"t_min", o.t_min}, {"t_max", t_max}}, 0, started);
    }
    return 0;
}

int run_advise(const AdviseOpts& o) {
    std::string started = iso_now();
    AdvisorReport rep = advise_parameters(scheme_from_name(o.scheme), o.bits);
    nlohmann::json j = {{"scheme", o.scheme},
                        {"target_bits", rep.target_bits},
                        {"overlay_min_n_exponent", rep.overlay_min_n_exponent},
                        {"overlay_feasible", rep.overlay_feasible},
                        {"practical_max_exponent", rep.practical_max_exponent},
                        {"notes", rep.notes}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : rep.per_t)
        arr.push_back({{"t", e.t}, {"min_n_exponent", e.min_n_exponent}, {"feasible", e.feasible}});
    j["per_t"] = arr;
    std::cout << j.dump(2) << "\n";
    write_manifest("advise", "advise", {{"scheme", o.scheme}, {"bits", o.bits}}, 0, started);
    return 0;
}

int run_simulate(const SimulateOpts& o) {
    std::string started = iso_now();
    Rng rng(o.seed);
    BitVector x = BitVector::random(o.count, rng);
    if (o.channel == "llm") {
        SyntheticTokenModel model;
        model.entropy_knob = o.entropy;
        Rng mr = rng.split(1);
        auto ps = model.marginals(o.count, mr);
        BitVector out = sample_token_bits(ps, x, rng.split(2).seed());
        BitVector rec = extract_bits(out, 1);
        double flip = static_cast<double>((rec ^ x).weight()) / o.count;
        std::cout << "token channel: " << o.count << " bits, entropy knob " << o.entropy
                  << ", flip rate " << flip << "\n";
    } else if (o.channel == "gim") {
        auto y = embed_gim_latent(x, rng.split(1).seed());
        if (o.sigma > 0.0) y = add_inversion_noise(y, o.sigma, rng.split(2).seed());
        GimChannelParams gp;
        gp.sigma = o.sigma > 0.0 ? o.sigma : 1.0;
        GimRecovery rec = recover_gim_codeword(y, gp);
        double flip = static_cast<double>((rec.hard ^ x).weight()) / o.count;
        std::cout << "latent channel: " << o.count << " bits, noise std " << o.sigma
                  << ", flip rate " << flip << ", ks " << ks_statistic_vs_normal(y) << "\n";
    } else {
        throw CLI::ValidationError("--channel must be llm or gim");
    }
    write_manifest("simulate", "simulate",
                   {{"channel", o.channel}, {"entropy", o.entropy}, {"sigma", o.sigma},
                    {"count", o.count}},
                   o.seed, started);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LDPC pseudorandom-code cryptanalysis workbench"};
    app.require_subcommand(1);

    KeygenOpts kg;
    auto* c_kg = app.add_subcommand("keygen", "generate a key pair");
    c_kg->add_option("--scheme", kg.scheme, "llm|gim|revised")->capture_default_str();
    c_kg->add_option("--n", kg.n, "code length")->required();
    c_kg->add_option("--t", kg.t, "secret row weight")->capture_default_str();
    c_kg->add_option("--omega", kg.omega, "encode noise rate")->capture_default_str();
    c_kg->add_option("--seed", kg.seed, "rng seed")->capture_default_str();
    c_kg->add_option("--out", kg.out, "output prefix (.pk/.sk)")->required();

    EncodeOpts en;
    auto* c_en = app.add_subcommand("encode", "encode random codewords");
    c_en->add_option("--pk", en.pk, "public key file")->required();
    c_en->add_option("--count", en.count, "codewords to emit")->capture_default_str();
    c_en->add_option("--omega", en.omega, "noise rate override (default: key's rate)");
    c_en->add_option("--seed", en.seed, "rng seed")->capture_default_str();
    c_en->add_option("--out", en.out, "codeword file")->required();

    DecodeOpts de;
    auto* c_de = app.add_subcommand("decode", "threshold-decode codewords");
    c_de->add_option("--sk", de.sk, "secret key file")->required();
    c_de->add_option("--in", de.in, "codeword file")->required();

    Attack1Opts a1;
    auto* c_a1 = app.add_subcommand("attack1", "collision search + zero-ratio distinguisher");
    c_a1->add_option("--pk", a1.pk, "public key file")->required();
    c_a1->add_option("--targets", a1.targets, "codeword file")->required();
    c_a1->add_option("--l1-size", a1.l1_size, "override list-1 cap");
    c_a1->add_option("--tau", a1.tau, "decision threshold (0 = per-t default: 0.60 t=3, 0.55 t=4)")
        ->capture_default_str();
    c_a1->add_option("--l", a1.l, "target expected recovered rows")->capture_default_str();
    c_a1->add_option("--threads", a1.threads, "worker threads")->capture_default_str();
    c_a1->add_option("--seed", a1.seed, "rng seed")->capture_default_str();
    c_a1->add_option("--out", a1.out, "report prefix")->capture_default_str();

    Attack2Opts a2;
    auto* c_a2 = app.add_subcommand("attack2", "weak-key scan + pair distinguisher");
    c_a2->add_option("--pk-dir", a2.pk_dir, "directory of .pk files")->required();
    c_a2->add_option("--targets", a2.targets, "codeword file")->required();
    c_a2->add_option("--tau", a2.tau, "decision threshold")->capture_default_str();
    c_a2->add_option("--out", a2.out, "report prefix")->capture_default_str();

    Attack3Opts a3;
    auto* c_a3 = app.add_subcommand("attack3", "noise recovery + disjoint overlay");
    c_a3->add_option("--pk", a3.pk, "public key file")->required();
    c_a3->add_option("--sk", a3.sk, "secret key file (optional decode check)");
    c_a3->add_option("--target", a3.target, "codeword file (first entry attacked)")->required();
    c_a3->add_option("--mu", a3.mu, "overlay rate (0 = solver)")->capture_default_str();
    c_a3->add_option("--max-iters", a3.max_iters, "decoding trial budget")->capture_default_str();
    c_a3->add_option("--threads", a3.threads, "worker threads")->capture_default_str();
    c_a3->add_option("--seed", a3.seed, "rng seed")->capture_default_str();
    c_a3->add_option("--out", a3.out, "report prefix")->capture_default_str();

    Attack4Opts a4;
    auto* c_a4 = app.add_subcommand("attack4", "public-key-free sparse-parity distinguisher");
    c_a4->add_option("--targets", a4.targets, "codeword file (paired in halves)")->required();
    c_a4->add_option("--weight", a4.weight, "parity weight (2 = duplicate-row variant)")
        ->capture_default_str();
    c_a4->add_option("--n-times", a4.n_times, "parity vectors to try (0 = heuristic)")
        ->capture_default_str();
    c_a4->add_option("--tau1", a4.tau1, "per-vector threshold (0 = derive from omega)")
        ->capture_default_str();
    c_a4->add_option("--tau2", a4.tau2, "triggered-counter threshold")->capture_default_str();
    c_a4->add_option("--omega", a4.omega, "assumed channel rate")->capture_default_str();
    c_a4->add_option("--seed", a4.seed, "rng seed")->capture_default_str();
    c_a4->add_option("--out", a4.out, "report prefix")->capture_default_str();

    EstimateOpts es;
    auto* c_es = app.add_subcommand("estimate", "emit the attack-cost table as CSV");
    c_es->add_option("--scheme", es.scheme, "llm|gim")->capture_default_str();
    c_es->add_option("--t-min", es.t_min, "first row weight")->capture_default_str();
    c_es->add_option("--t-max", es.t_max, "last row weight (0 = scheme max)")->capture_default_str();
    c_es->add_option("--n", es.n, "code length (0 = published default)")->capture_default_str();
    c_es->add_option("--out", es.out, "CSV file (default: stdout only)");

    AdviseOpts ad;
    auto* c_ad = app.add_subcommand("advise", "suggest code lengths for a security target");
    c_ad->add_option("--scheme", ad.scheme, "llm|gim")->capture_default_str();
    c_ad->add_option("--bits", ad.bits, "target security bits")->capture_default_str();

    SimulateOpts si;
    auto* c_si = app.add_subcommand("simulate", "run a synthetic watermark channel");
    c_si->add_option("--channel", si.channel, "llm|gim")->capture_default_str();
    c_si->add_option("--entropy", si.entropy, "token marginal concentration")->capture_default_str();
    c_si->add_option("--sigma", si.sigma, "latent inversion-noise std")->capture_default_str();
    c_si->add_option("--count", si.count, "bits to push through")->capture_default_str();
    c_si->add_option("--seed", si.seed, "rng seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_kg->parsed()) return run_keygen(kg);
        if (c_en->parsed()) return run_encode(en);
        if (c_de->parsed()) return run_decode(de);
        if (c_a1->parsed()) return run_attack1(a1);
        if (c_a2->parsed()) return run_attack2(a2);
        if (c_a3->parsed()) return run_attack3(a3);
        if (c_a4->parsed()) return run_attack4(a4);
        if (c_es->parsed()) return run_estimate(es);
        if (c_ad->parsed()) return run_advise(ad);
        if (c_si->parsed()) return run_simulate(si);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const MagicMismatchError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 3;
    } catch (const LengthMismatchError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
