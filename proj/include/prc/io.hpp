#pragma once

// On-disk formats: keys and codewords as a one-line JSON header followed by
// a bit-packed binary payload (LSB-first within each octet, rows padded to
// octet boundaries, integers little-endian fixed width); reports as JSON;
// complexity tables as CSV mirroring the published column order.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "prc/complexity.hpp"
#include "prc/gf2.hpp"
#include "prc/ldpc.hpp"
#include "prc/params.hpp"

namespace prc {

constexpr const char* KEY_MAGIC = "PRCKEY1";
constexpr const char* CODEWORD_MAGIC = "PRCCW1";

struct MagicMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LengthMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<uint8_t> pack_bits(const BitVector& v) {
    std::vector<uint8_t> out((v.size() + 7) / 8, 0);
    for (size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) out[i >> 3] |= static_cast<uint8_t>(1u << (i & 7));
    return out;
}

inline BitVector unpack_bits(const uint8_t* data, size_t nbits) {
    BitVector v(nbits);
    for (size_t i = 0; i < nbits; ++i)
        if ((data[i >> 3] >> (i & 7)) & 1u) v.set(i, true);
    return v;
}

inline void put_u32(std::string& buf, uint32_t x) {
    for (int b = 0; b < 4; ++b) buf.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
}

inline uint32_t get_u32(const std::string& buf, size_t& off) {
    if (off + 4 > buf.size()) throw LengthMismatchError("truncated integer field");
    uint32_t x = 0;
    for (int b = 0; b < 4; ++b) x |= static_cast<uint32_t>(static_cast<uint8_t>(buf[off + b])) << (8 * b);
    off += 4;
    return x;
}

inline nlohmann::json params_header(const PrcParams& p) {
    return {{"scheme", scheme_name(p.scheme)}, {"n", p.n},      {"r", p.r},
            {"g", p.g},                        {"t", p.t},      {"lambda", p.lambda},
            {"omega", p.omega}};
}

inline PrcParams params_from_header(const nlohmann::json& h) {
    PrcParams p;
    try {
        p.scheme = scheme_from_name(h.at("scheme").get<std::string>());
        p.n = h.at("n").get<uint32_t>();
        p.r = h.at("r").get<uint32_t>();
        p.g = h.at("g").get<uint32_t>();
        p.t = h.at("t").get<uint32_t>();
        p.lambda = h.at("lambda").get<uint32_t>();
        p.omega = h.at("omega").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw InvariantError(std::string("bad header fields: ") + e.what());
    }
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw InvariantError(std::string("header violates parameter invariants: ") + e.what());
    }
    return p;
}

inline std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_all(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

// header line + payload split
inline std::pair<nlohmann::json, std::string> split_header(const std::string& blob,
                                                           const char* magic) {
    size_t nl = blob.find('\n');
    if (nl == std::string::npos) throw MagicMismatchError("missing header line");
    nlohmann::json h;
    try {
        h = nlohmann::json::parse(blob.substr(0, nl));
    } catch (const nlohmann::json::exception&) {
        throw MagicMismatchError("header is not valid JSON");
    }
    if (!h.contains("magic") || h["magic"] != magic)
        throw MagicMismatchError("magic mismatch or unknown format version");
    return {h, blob.substr(nl + 1)};
}

}  // namespace detail

inline std::string serialize_public_key(const PublicKey& pk, const PrcParams& p) {
    nlohmann::json h = detail::params_header(p);
    h["magic"] = KEY_MAGIC;
    h["kind"] = "public";
    h["encoding"] = "G-rowmajor-lsb, z";
    std::string out = h.dump();
    out.push_back('\n');
    for (uint32_t i = 0; i < p.n; ++i) {
        auto rowb = detail::pack_bits(pk.G.row(i));
        out.append(reinterpret_cast<const char*>(rowb.data()), rowb.size());
    }
    auto zb = detail::pack_bits(pk.z);
    out.append(reinterpret_cast<const char*>(zb.data()), zb.size());
    return out;
}

inline std::pair<PublicKey, PrcParams> deserialize_public_key(const std::string& blob) {
    auto [h, payload] = detail::split_header(blob, KEY_MAGIC);
    if (!h.contains("kind") || h["kind"] != "public") throw InvariantError("not a public key file");
    PrcParams p = detail::params_from_header(h);
    const size_t row_bytes = (p.g + 7) / 8;
    const size_t z_bytes = (p.n + 7) / 8;
    if (payload.size() != row_bytes * p.n + z_bytes)
        throw LengthMismatchError("public key payload size mismatch");
    PublicKey pk;
    pk.G = BitMatrix(p.n, p.g);
    const uint8_t* data = reinterpret_cast<const uint8_t*>(payload.data());
    for (uint32_t i = 0; i < p.n; ++i)
        pk.G.set_row(i, detail::unpack_bits(data + i * row_bytes, p.g));
    pk.z = detail::unpack_bits(data + row_bytes * p.n, p.n);
    return {std::move(pk), p};
}

inline std::string serialize_secret_key(const SecretKey& sk, const PrcParams& p) {
    nlohmann::json h = detail::params_header(p);
    h["magic"] = KEY_MAGIC;
    h["kind"] = "secret";
    h["encoding"] = "P-supports-u32le, z";
    std::string out = h.dump();
    out.push_back('\n');
    for (uint32_t i = 0; i < p.r; ++i) {
        const auto& sup = sk.P.row_supports[i];
        if (sup.size() != p.t) throw InvariantError("secret row weight != t");
        for (uint32_t j : sup) detail::put_u32(out, j);
    }
    auto zb = detail::pack_bits(sk.z);
    out.append(reinterpret_cast<const char*>(zb.data()), zb.size());
    return out;
}

inline std::pair<SecretKey, PrcParams> deserialize_secret_key(const std::string& blob) {
    auto [h, payload] = detail::split_header(blob, KEY_MAGIC);
    if (!h.contains("kind") || h["kind"] != "secret") throw InvariantError("not a secret key file");
    PrcParams p = detail::params_from_header(h);
    const size_t z_bytes = (p.n + 7) / 8;
    if (payload.size() != static_cast<size_t>(p.r) * p.t * 4 + z_bytes)
        throw LengthMismatchError("secret key payload size mismatch");
    SecretKey sk;
    sk.P.rows = p.r;
    sk.P.cols = p.n;
    sk.P.row_supports.resize(p.r);
    size_t off = 0;
    for (uint32_t i = 0; i < p.r; ++i) {
        auto& sup = sk.P.row_supports[i];
        sup.resize(p.t);
        for (uint32_t j = 0; j < p.t; ++j) sup[j] = detail::get_u32(payload, off);
        for (uint32_t j = 0; j < p.t; ++j) {
            if (sup[j] >= p.n) throw InvariantError("secret support index out of range");
            if (j && sup[j] <= sup[j - 1]) throw InvariantError("secret support not increasing");
        }
    }
    sk.z = detail::unpack_bits(reinterpret_cast<const uint8_t*>(payload.data()) + off, p.n);
    return {std::move(sk), p};
}

inline std::string serialize_codewords(const std::vector<Codeword>& cws, uint32_t n) {
    nlohmann::json h = {{"magic", CODEWORD_MAGIC}, {"n", n}, {"count", cws.size()}};
    std::string out = h.dump();
    out.push_back('\n');
    for (const Codeword& cw : cws) {
        if (cw.x.size() != n) throw InvariantError("codeword length mismatch");
        auto b = detail::pack_bits(cw.x);
        out.append(reinterpret_cast<const char*>(b.data()), b.size());
    }
    return out;
}

inline std::vector<Codeword> deserialize_codewords(const std::string& blob) {
    auto [h, payload] = detail::split_header(blob, CODEWORD_MAGIC);
    uint32_t n;
    size_t count;
    try {
        n = h.at("n").get<uint32_t>();
        count = h.at("count").get<size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw InvariantError(std::string("bad codeword header: ") + e.what());
    }
    const size_t bytes = (n + 7) / 8;
    if (payload.size() != bytes * count) throw LengthMismatchError("codeword payload size mismatch");
    std::vector<Codeword> cws(count);
    for (size_t i = 0; i < count; ++i) {
        cws[i].x = detail::unpack_bits(reinterpret_cast<const uint8_t*>(payload.data()) + i * bytes, n);
    }
    return cws;
}

struct AttackReport {
    std::string attack;
    uint64_t seed = 0;
    nlohmann::json params;
    nlohmann::json counters;
    double wall_time_ms = 0.0;
    std::string verdict;  // "watermarked" / "not-watermarked" / "FAILURE"
    std::string failure_reason;

    nlohmann::json to_json() const {
        nlohmann::json j = {{"attack", attack},   {"seed", seed},
                            {"params", params},   {"counters", counters},
                            {"wall_time_ms", wall_time_ms}, {"verdict", verdict}};
        if (!failure_reason.empty()) j["failure_reason"] = failure_reason;
        return j;
    }
};

inline std::string format_fixed(double v, int decimals) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(decimals);
    ss << v;
    return ss.str();
}

// CSV in the published column order; margins to 3 decimals, log-costs to 2.
inline std::string table_to_csv(Scheme scheme, const std::vector<ComplexityRow>& rows) {
    std::ostringstream ss;
    if (scheme == Scheme::GIM)
        ss << "t,eps,rho,eta,log2_t_partial,log2_p_weak,log2_t_dis,log2_t_overlay,"
              "log2_t_overlay_concrete,lambda\n";
    else
        ss << "t,eps,rho,log2_t_partial,log2_p_weak,log2_t_dis,log2_t_overlay,lambda\n";
    for (const auto& row : rows) {
        ss << row.t << ',' << format_fixed(row.epsilon, 3) << ',' << format_fixed(row.rho, 3);
        if (scheme == Scheme::GIM) ss << ',' << format_fixed(row.eta.value_or(0.0), 3);
        ss << ',' << format_fixed(row.log2_t_partial, 2) << ',' << format_fixed(row.log2_p_weak, 2)
           << ',' << format_fixed(row.log2_t_dis, 2) << ',' << format_fixed(row.log2_t_overlay, 2);
        if (scheme == Scheme::GIM)
            ss << ',' << format_fixed(row.log2_t_overlay_concrete.value_or(0.0), 2);
        ss << ',' << row.lambda << '\n';
    }
    return ss.str();
}

inline nlohmann::json table_to_json(Scheme scheme, const std::vector<ComplexityRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j = {{"t", row.t},
                            {"eps", row.epsilon},
                            {"rho", row.rho},
                            {"log2_t_partial", row.log2_t_partial},
                            {"log2_p_weak", row.log2_p_weak},
                            {"log2_t_dis", row.log2_t_dis},
                            {"log2_t_overlay", row.log2_t_overlay},
                            {"lambda", row.lambda}};
        if (scheme == Scheme::GIM) {
            j["eta"] = row.eta.value_or(0.0);
            j["log2_t_overlay_concrete"] = row.log2_t_overlay_concrete.value_or(0.0);
        }
        arr.push_back(j);
    }
    return arr;
}

inline void write_key_files(const std::string& prefix, const KeyPair& kp, const PrcParams& p) {
    detail::write_all(prefix + ".pk", serialize_public_key(kp.pk, p));
    detail::write_all(prefix + ".sk", serialize_secret_key(kp.sk, p));
}

inline std::pair<PublicKey, PrcParams> read_public_key(const std::string& path) {
    return deserialize_public_key(detail::read_all(path));
}

inline std::pair<SecretKey, PrcParams> read_secret_key(const std::string& path) {
    return deserialize_secret_key(detail::read_all(path));
}

}  // namespace prc
