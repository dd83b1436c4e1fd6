#include "aw/kat.hpp"

#include <sstream>

namespace aw {

static Bytes deterministic_bytes(u64 seed, size_t n) {
    SplitMix64 rng(seed);
    Bytes out(n);
    u64 w = 0;
    for (size_t i = 0; i < n; ++i) {
        if (i % 8 == 0) w = rng.next();
        out[i] = static_cast<u8>(w >> (56 - 8 * (i % 8)));
    }
    return out;
}

std::vector<KatRecord> kat_grid(const CipherConfig& cfg) {
    static const size_t ad_lens[] = {0, 8, 17};
    static const size_t pt_lens[] = {0, 8, 23};
    static const size_t msg_lens[] = {0, 8, 17};

    std::vector<KatRecord> records;
    unsigned index = 0;
    for (Cipher cipher : {Cipher::Ace, Cipher::Wage}) {
        for (unsigned p : supported_degrees(cipher)) {
            unsigned grid = 0;
            for (size_t alen : ad_lens) {
                for (size_t plen : pt_lens) {
                    // Seed from the grid position only, not from p.
                    u64 seed = (cipher == Cipher::Ace ? 0x41 : 0x57) * 0x10001ull + grid;
                    KatRecord r;
                    r.index = index++;
                    r.cipher = cipher;
                    r.p = p;
                    r.key = deterministic_bytes(seed * 4 + 0, 16);
                    r.nonce = deterministic_bytes(seed * 4 + 1, 16);
                    r.ad = deterministic_bytes(seed * 4 + 2, alen);
                    r.pt = deterministic_bytes(seed * 4 + 3, plen);
                    AeadRequest req{r.key, r.nonce, r.ad, r.pt, {}, Direction::Encrypt};
                    auto enc = aead(req, cipher, cfg, p);
                    r.ct = enc.payload_out;
                    r.tag = enc.tag;
                    records.push_back(std::move(r));
                    ++grid;
                }
            }
        }
    }
    for (unsigned p : supported_degrees(Cipher::Ace)) {
        unsigned grid = 0;
        for (size_t mlen : msg_lens) {
            KatRecord r;
            r.index = index++;
            r.cipher = Cipher::Ace;
            r.p = p;
            r.hash = true;
            r.msg = deterministic_bytes(0x68 * 0x10001ull + grid, mlen);
            r.digest = ace_hash(r.msg, cfg, p);
            records.push_back(std::move(r));
            ++grid;
        }
    }
    return records;
}

std::string serialize_kats(const std::vector<KatRecord>& records,
                           const CipherConfig& cfg) {
    std::ostringstream out;
    out << "# known answer tests\n";
    out << "config = " << to_hex64(config_fingerprint(cfg)) << "\n\n";
    for (const auto& r : records) {
        out << "count = " << r.index << "\n";
        out << "cipher = " << cipher_name(r.cipher) << "\n";
        out << "p = " << r.p << "\n";
        if (r.hash) {
            out << "msg = " << to_hex(r.msg) << "\n";
            out << "digest = " << to_hex(r.digest) << "\n";
        } else {
            out << "key = " << to_hex(r.key) << "\n";
            out << "nonce = " << to_hex(r.nonce) << "\n";
            out << "ad = " << to_hex(r.ad) << "\n";
            out << "pt = " << to_hex(r.pt) << "\n";
            out << "ct = " << to_hex(r.ct) << "\n";
            out << "tag = " << to_hex(r.tag) << "\n";
        }
        out << "\n";
    }
    return out.str();
}

std::vector<KatRecord> parse_kats(const std::string& text, u64* fingerprint) {
    std::vector<KatRecord> records;
    std::istringstream in(text);
    std::string line;
    unsigned lineno = 0;
    KatRecord cur;
    bool open = false;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("kat line " + std::to_string(lineno) + ": " + msg);
    };
    auto flush = [&]() {
        if (open) records.push_back(cur);
        cur = KatRecord{};
        open = false;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            flush();
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "config") {
                Bytes raw = from_hex(val);
                if (raw.size() == 8 && fingerprint) *fingerprint = load_be64(raw.data());
            } else if (key == "count") {
                cur.index = static_cast<unsigned>(std::stoul(val));
                open = true;
            } else if (key == "cipher") {
                if (val == "ace")
                    cur.cipher = Cipher::Ace;
                else if (val == "wage")
                    cur.cipher = Cipher::Wage;
                else
                    fail("unknown cipher " + val);
            } else if (key == "p") {
                cur.p = static_cast<unsigned>(std::stoul(val));
            } else if (key == "key") {
                cur.key = from_hex(val);
            } else if (key == "nonce") {
                cur.nonce = from_hex(val);
            } else if (key == "ad") {
                cur.ad = from_hex(val);
            } else if (key == "pt") {
                cur.pt = from_hex(val);
            } else if (key == "ct") {
                cur.ct = from_hex(val);
            } else if (key == "tag") {
                cur.tag = from_hex(val);
            } else if (key == "msg") {
                cur.msg = from_hex(val);
                cur.hash = true;
            } else if (key == "digest") {
                cur.digest = from_hex(val);
                cur.hash = true;
            } else {
                fail("unknown field " + key);
            }
        } catch (const std::invalid_argument& e) {
            std::string what = e.what();
            if (what.rfind("kat line", 0) == 0) throw;
            fail("bad value for " + key);
        }
    }
    flush();
    return records;
}

std::string generate_kats(const CipherConfig& cfg) {
    return serialize_kats(kat_grid(cfg), cfg);
}

KatVerifyResult verify_kats(const std::string& text, const CipherConfig& cfg) {
    KatVerifyResult res;
    u64 fp = 0;
    auto records = parse_kats(text, &fp);
    if (fp != config_fingerprint(cfg)) {
        res.ok = false;
        res.field = "config";
        res.message = "config fingerprint mismatch: vectors were generated for "
                      "a different table set";
        return res;
    }
    for (const auto& r : records) {
        std::string field;
        if (r.hash) {
            if (ace_hash(r.msg, cfg, r.p) != r.digest) field = "digest";
        } else {
            AeadRequest req{r.key, r.nonce, r.ad, r.pt, {}, Direction::Encrypt};
            auto enc = aead(req, r.cipher, cfg, r.p);
            if (enc.payload_out != r.ct)
                field = "ct";
            else if (enc.tag != r.tag)
                field = "tag";
        }
        if (!field.empty()) {
            res.ok = false;
            res.failed_index = r.index;
            res.field = field;
            res.message = "record " + std::to_string(r.index) + ": " + field +
                          " does not match the recomputed value";
            return res;
        }
    }
    res.message = "all " + std::to_string(records.size()) + " records verified";
    return res;
}

}  // namespace aw
