#include <ctec/kat.hpp>

#include <ctec/error.hpp>
#include <ctec/hex.hpp>
#include <ctec/oracle.hpp>
#include <ctec/protocols.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

namespace ctec {

namespace {

using oracle::Point;
using json = nlohmann::json;

constexpr std::pair<KatKind, std::string_view> kKindNames[] = {
   {KatKind::Keygen, "keygen"},
   {KatKind::Derive, "derive"},
   {KatKind::Sign, "sign"},
   {KatKind::Verify, "verify"},
   {KatKind::PubkeyValidate, "pubkey_validate"},
};

constexpr std::pair<Provenance, std::string_view> kProvenanceNames[] = {
   {Provenance::Cavp, "cavp"},
   {Provenance::GeneratedPositive, "generated-positive"},
   {Provenance::GeneratedNegative, "generated-negative"},
   {Provenance::ExtremeKey, "extreme-key"},
   {Provenance::SmallSubgroup, "small-subgroup"},
   {Provenance::X0Regression, "x0-regression"},
};

std::string lower(std::string_view s) {
   std::string out(s);
   std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
   return out;
}

std::string hex_of(const mpz_class& v, std::size_t len) {
   return to_hex(oracle::to_bytes(v, len));
}

// Minimal-width hex for values that may not fit the field width.
std::string hex_min(const mpz_class& v) {
   const Bytes b = oracle::to_bytes(v);
   return b.empty() ? "00" : to_hex(b);
}

mpz_class mpz_of(const KatValues& m, const std::string& key) {
   return oracle::to_mpz(from_hex(m.at(key)));
}

Bytes bytes_of(const KatValues& m, const std::string& key) {
   return from_hex(m.at(key));
}

// Big-integer reference semantics for every KAT operation.
class Reference {
   public:
      explicit Reference(const CurveDescriptor& desc) :
            m_desc(desc), m_c(desc), m_qbits(mpz_sizeinbase(m_c.q().get_mpz_t(), 2)), m_gost(is_gost_curve(desc)) {}

      const oracle::Curve& curve() const { return m_c; }

      const CurveDescriptor& desc() const { return m_desc; }

      std::size_t fb() const { return m_c.field_bytes(); }

      std::size_t qb() const { return m_c.order_bytes(); }

      bool gost() const { return m_gost; }

      HashSpec default_hash() const { return HashSpec::default_for(m_qbits); }

      bool in_keyrange(const mpz_class& d) const { return d >= 1 && d < m_c.q(); }

      KatValues point_values(const Point& P, const char* xk, const char* yk) const {
         return KatValues{{xk, hex_of(P.x, fb())}, {yk, hex_of(P.y, fb())}};
      }

      // A peer given as coordinates: in range and on the curve.
      std::optional<Point> peer(const mpz_class& x, const mpz_class& y) const {
         if(x < 0 || y < 0 || x >= m_c.p() || y >= m_c.p()) {
            return std::nullopt;
         }
         const Point P = Point::affine(x, y);
         if(!m_c.on_curve(P)) {
            return std::nullopt;
         }
         return P;
      }

      std::optional<KatValues> keygen(const mpz_class& d) const {
         if(!in_keyrange(d)) {
            return std::nullopt;
         }
         return point_values(m_c.mul(d, m_c.generator()), "Qx", "Qy");
      }

      std::optional<KatValues> derive(const mpz_class& d, const mpz_class& px, const mpz_class& py) const {
         const auto P = peer(px, py);
         if(!in_keyrange(d) || !P) {
            return std::nullopt;
         }
         const Point K = m_c.mul(m_c.h() * d, *P);
         if(K.infinity) {
            return std::nullopt;
         }
         return KatValues{{"Z", hex_of(K.x, fb())}};
      }

      std::optional<Point> vko_point(const mpz_class& d, const mpz_class& ukm, const mpz_class& px, const mpz_class& py) const {
         const auto P = peer(px, py);
         if(!in_keyrange(d) || !in_keyrange(ukm) || !P) {
            return std::nullopt;
         }
         const mpz_class w = (ukm * d) % m_c.q();
         const Point K = m_c.mul(m_c.h() * w, *P);
         if(K.infinity) {
            return std::nullopt;
         }
         return K;
      }

      KatValues vko_key(const Point& K, const HashSpec& kdf) const {
         Bytes xy = oracle::to_bytes(K.x, fb());
         const Bytes y = oracle::to_bytes(K.y, fb());
         xy.insert(xy.end(), y.begin(), y.end());
         return KatValues{{"K", to_hex(kdf.digest(xy))}};
      }

      std::optional<KatValues> vko(const mpz_class& d,
                                   const mpz_class& ukm,
                                   const mpz_class& px,
                                   const mpz_class& py,
                                   const HashSpec& kdf) const {
         const auto K = vko_point(d, ukm, px, py);
         if(!K) {
            return std::nullopt;
         }
         return vko_key(*K, kdf);
      }

      // Digest of a message for ECDSA; GOST cases carry the digest itself.
      Bytes digest(const Bytes& msg, const HashSpec& hash) const { return m_gost ? msg : hash.digest(msg); }

      mpz_class hash_scalar(const Bytes& digest) const {
         mpz_class e = oracle::to_mpz(digest);
         if(m_gost) {
            e %= m_c.q();
            return e == 0 ? mpz_class(1) : e;
         }
         const std::size_t dbits = 8 * digest.size();
         if(dbits > m_qbits) {
            e >>= static_cast<mp_bitcnt_t>(dbits - m_qbits);
         }
         return e % m_c.q();
      }

      std::optional<KatValues> sign(const mpz_class& d, const Bytes& msg, const mpz_class& k, const HashSpec& hash) const {
         if(!in_keyrange(d) || !in_keyrange(k)) {
            return std::nullopt;
         }
         const mpz_class& q = m_c.q();
         const mpz_class e = hash_scalar(digest(msg, hash));
         const Point R = m_c.mul(k, m_c.generator());
         const mpz_class r = R.x % q;
         if(r == 0) {
            return std::nullopt;
         }
         mpz_class s;
         if(m_gost) {
            s = (r * d + k * e) % q;
         } else {
            mpz_class kinv;
            mpz_invert(kinv.get_mpz_t(), k.get_mpz_t(), q.get_mpz_t());
            s = (kinv * (e + d * r)) % q;
         }
         if(s == 0) {
            return std::nullopt;
         }
         return KatValues{{"r", hex_of(r, qb())}, {"s", hex_of(s, qb())}};
      }

      // The RFC 6979 nonce for (d, msg); the HMAC-DRBG is not curve
      // arithmetic, so the library generator is reused.
      mpz_class deterministic_k(const mpz_class& d, const Bytes& msg, const HashSpec& hash) const {
         const ScalarField sf(m_desc.q);
         const Bytes h1 = digest(msg, hash);
         const HashSpec drbg_hash = m_gost ? default_hash() : hash;
         Rfc6979Nonce gen(sf, drbg_hash, sf.reduce(oracle::to_bytes(d, qb())), h1);
         for(;;) {
            const mpz_class k = oracle::to_mpz(sf.encode(gen.next()));
            if(sign(d, msg, k, hash)) {
               return k;
            }
         }
      }

      bool verify(const mpz_class& qx,
                  const mpz_class& qy,
                  const Bytes& msg,
                  const mpz_class& r,
                  const mpz_class& s,
                  const HashSpec& hash) const {
         const auto Q = peer(qx, qy);
         if(!Q || !in_keyrange(r) || !in_keyrange(s)) {
            return false;
         }
         const mpz_class& q = m_c.q();
         const mpz_class e = hash_scalar(digest(msg, hash));
         mpz_class u1, u2;
         if(m_gost) {
            mpz_class v;
            mpz_invert(v.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
            u1 = (s * v) % q;
            u2 = (q - (r * v) % q) % q;
         } else {
            mpz_class w;
            mpz_invert(w.get_mpz_t(), s.get_mpz_t(), q.get_mpz_t());
            u1 = (e * w) % q;
            u2 = (r * w) % q;
         }
         const Point R = m_c.add(m_c.mul(u1, m_c.generator()), m_c.mul(u2, *Q));
         return !R.infinity && R.x % q == r;
      }

      bool pubkey_valid(const mpz_class& qx, const mpz_class& qy) const {
         const auto Q = peer(qx, qy);
         return Q && m_c.mul(m_c.q(), *Q).infinity;
      }

   private:
      const CurveDescriptor& m_desc;
      oracle::Curve m_c;
      std::size_t m_qbits;
      bool m_gost;
};

std::optional<KatValues> accept(bool ok) {
   return ok ? std::optional<KatValues>(KatValues{}) : std::nullopt;
}

// Suite construction for one curve.
class Generator {
   public:
      Generator(const CurveDescriptor& desc, std::uint64_t seed, const SuiteOptions& opts) :
            m_ref(desc), m_opts(opts), m_rng(seed ^ name_hash(desc.name)) {}

      std::vector<KatCase> run() {
         keygen_cases();
         derive_cases();
         if(m_ref.gost()) {
            vko_cases();
         }
         sign_and_verify_cases();
         pubkey_cases();
         if(m_ref.curve().h() != 1) {
            small_subgroup_cases();
         }
         x0_cases();
         return std::move(m_out);
      }

   private:
      static std::uint64_t name_hash(std::string_view s) {
         std::uint64_t h = 0xcbf29ce484222325ULL;
         for(char c : s) {
            h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
         }
         return h;
      }

      const oracle::Curve& C() const { return m_ref.curve(); }

      mpz_class random_below(const mpz_class& n) {
         Bytes buf(oracle::to_bytes(n).size() + 8);
         for(auto& b : buf) {
            b = static_cast<std::uint8_t>(m_rng());
         }
         return oracle::to_mpz(buf) % n;
      }

      mpz_class random_key() { return random_below(C().q() - 1) + 1; }

      Point random_point() { return C().mul(random_key(), C().generator()); }

      Bytes random_msg() {
         if(m_ref.gost()) {
            Bytes d(m_ref.default_hash().output_length());
            for(auto& b : d) {
               b = static_cast<std::uint8_t>(m_rng());
            }
            return d;
         }
         Bytes m(1 + m_rng() % 64);
         for(auto& b : m) {
            b = static_cast<std::uint8_t>(m_rng());
         }
         return m;
      }

      void add(KatKind kind, Provenance prov, KatValues inputs, std::optional<KatValues> expected) {
         const std::string key = std::string(to_string(kind)) + "/" + std::string(to_string(prov));
         const std::size_t idx = m_counters[key]++;
         KatCase c;
         c.id = m_ref.desc().name + "/" + key + "/" + std::to_string(idx);
         c.curve = m_ref.desc().name;
         c.kind = kind;
         c.inputs = std::move(inputs);
         c.expected = std::move(expected);
         c.provenance = prov;
         m_out.push_back(std::move(c));
      }

      KatValues peer_inputs(const mpz_class& d, const mpz_class& x, const mpz_class& y) const {
         return KatValues{{"d", hex_of(d, m_ref.qb())}, {"peerX", hex_min_fb(x)}, {"peerY", hex_min_fb(y)}};
      }

      // Field-width hex where it fits, minimal otherwise.
      std::string hex_min_fb(const mpz_class& v) const {
         return oracle::to_bytes(v).size() <= m_ref.fb() ? hex_of(v, m_ref.fb()) : hex_min(v);
      }

      void keygen_cases() {
         const std::size_t qb = m_ref.qb();
         for(std::size_t i = 0; i != m_opts.random_cases; ++i) {
            const mpz_class d = random_key();
            add(KatKind::Keygen, Provenance::GeneratedPositive, {{"d", hex_of(d, qb)}}, m_ref.keygen(d));
         }
         // Extreme keys, walked incrementally: [d]g for d < 2^b and
         // [q-d]g = -[d]g for 1 <= d <= 2^b.
         const unsigned long bound = 1UL << m_opts.extreme_bits;
         Point P = C().generator();
         for(unsigned long d = 1; d <= bound; ++d) {
            if(d < bound) {
               add(KatKind::Keygen, Provenance::ExtremeKey, {{"d", hex_of(mpz_class(d), qb)}}, m_ref.point_values(P, "Qx", "Qy"));
            }
            const Point N = C().neg(P);
            add(KatKind::Keygen, Provenance::ExtremeKey, {{"d", hex_of(C().q() - d, qb)}}, m_ref.point_values(N, "Qx", "Qy"));
            P = C().add(P, C().generator());
         }
         const mpz_class& q = C().q();
         for(const mpz_class& d : {mpz_class(0), q, mpz_class(q + 1), mpz_class(2 * q)}) {
            add(KatKind::Keygen, Provenance::GeneratedNegative, {{"d", hex_min(d)}}, m_ref.keygen(d));
         }
      }

      void derive_cases() {
         for(std::size_t i = 0; i != m_opts.random_cases; ++i) {
            const mpz_class d = random_key();
            const Point P = random_point();
            add(KatKind::Derive, Provenance::GeneratedPositive, peer_inputs(d, P.x, P.y), m_ref.derive(d, P.x, P.y));
         }
         const mpz_class d = random_key();
         const Point P = random_point();
         const mpz_class& p = C().p();
         // Off-curve, out-of-range coordinate, and (0,0) as a peer.
         const std::pair<mpz_class, mpz_class> bad[] = {
            {P.x, (P.y + 1) % p},
            {P.x + p, P.y},
            {0, 0},
         };
         for(const auto& [x, y] : bad) {
            add(KatKind::Derive, Provenance::GeneratedNegative, peer_inputs(d, x, y), m_ref.derive(d, x, y));
         }
         add(KatKind::Derive, Provenance::GeneratedNegative, peer_inputs(0, P.x, P.y), m_ref.derive(0, P.x, P.y));
      }

      void add_vko(Provenance prov, const mpz_class& d, const mpz_class& ukm, const mpz_class& x, const mpz_class& y) {
         KatValues in = peer_inputs(d, x, y);
         in["ukm"] = hex_of(ukm, m_ref.qb());
         add(KatKind::Derive, prov, std::move(in), m_ref.vko(d, ukm, x, y, m_ref.default_hash()));
      }

      void vko_cases() {
         for(std::size_t i = 0; i != m_opts.random_cases; ++i) {
            const Point P = random_point();
            add_vko(Provenance::GeneratedPositive, random_key(), random_key(), P.x, P.y);
         }
         const Point P = random_point();
         add_vko(Provenance::GeneratedNegative, random_key(), random_key(), P.x, (P.y + 1) % C().p());
      }

      void sign_and_verify_cases() {
         const HashSpec hash = m_ref.default_hash();
         const std::size_t qb = m_ref.qb();
         const mpz_class& q = C().q();
         for(std::size_t i = 0; i != m_opts.random_cases; ++i) {
            const mpz_class d = random_key();
            const Bytes msg = random_msg();
            mpz_class k = random_key();
            std::optional<KatValues> sig = m_ref.sign(d, msg, k, hash);
            while(!sig) {
               k = random_key();
               sig = m_ref.sign(d, msg, k, hash);
            }
            add(KatKind::Sign,
                Provenance::GeneratedPositive,
                {{"d", hex_of(d, qb)}, {"msg", to_hex(msg)}, {"k", hex_of(k, qb)}},
                sig);

            const Point Q = C().mul(d, C().generator());
            KatValues vin = m_ref.point_values(Q, "Qx", "Qy");
            vin["msg"] = to_hex(msg);
            vin["r"] = sig->at("r");
            vin["s"] = sig->at("s");
            add(KatKind::Verify, Provenance::GeneratedPositive, vin, KatValues{});

            // Single-field mutation, cycling through msg, r, s and Q.
            KatValues bad = vin;
            switch(i % 4) {
               case 0: {
                  Bytes m = msg;
                  m[m_rng() % m.size()] ^= static_cast<std::uint8_t>(1u << (m_rng() % 8));
                  bad["msg"] = to_hex(m);
                  break;
               }
               case 1:
                  bad["r"] = hex_of((mpz_of(vin, "r") + 1) % q, qb);
                  break;
               case 2:
                  bad["s"] = hex_of(q - mpz_of(vin, "s"), qb);
                  break;
               default: {
                  const Point W = C().add(Q, C().generator());
                  bad["Qx"] = hex_of(W.x, m_ref.fb());
                  bad["Qy"] = hex_of(W.y, m_ref.fb());
                  break;
               }
            }
            add_verify_negative(bad, hash);
         }
         // Range gates.
         const KatValues base = m_out.back().inputs;
         for(const auto& [field, value] : {std::pair{"r", mpz_class(0)}, std::pair{"s", mpz_class(0)}, std::pair{"r", q}}) {
            KatValues bad = base;
            bad[field] = hex_of(value, qb);
            add_verify_negative(bad, hash);
         }

         // Deterministic (RFC 6979) nonces.
         for(int i = 0; i != 2; ++i) {
            const mpz_class d = random_key();
            const Bytes msg = random_msg();
            const mpz_class k = m_ref.deterministic_k(d, msg, hash);
            add(KatKind::Sign, Provenance::GeneratedPositive, {{"d", hex_of(d, qb)}, {"msg", to_hex(msg)}}, m_ref.sign(d, msg, k, hash));
         }
         // Out-of-range key and nonce.
         const Bytes msg = random_msg();
         add(KatKind::Sign, Provenance::GeneratedNegative, {{"d", hex_of(0, qb)}, {"msg", to_hex(msg)}, {"k", hex_of(random_key(), qb)}}, std::nullopt);
         add(KatKind::Sign, Provenance::GeneratedNegative, {{"d", hex_of(random_key(), qb)}, {"msg", to_hex(msg)}, {"k", hex_of(q, qb)}}, std::nullopt);
      }

      void add_verify_negative(const KatValues& in, const HashSpec& hash) {
         const bool ok = m_ref.verify(mpz_of(in, "Qx"), mpz_of(in, "Qy"), bytes_of(in, "msg"), mpz_of(in, "r"), mpz_of(in, "s"), hash);
         if(!ok) {
            add(KatKind::Verify, Provenance::GeneratedNegative, in, std::nullopt);
         }
      }

      void add_pubkey(Provenance prov, const mpz_class& x, const mpz_class& y) {
         add(KatKind::PubkeyValidate,
             prov,
             {{"Qx", hex_min_fb(x)}, {"Qy", hex_min_fb(y)}},
             accept(m_ref.pubkey_valid(x, y)));
      }

      void pubkey_cases() {
         const Point g = C().generator();
         add_pubkey(Provenance::GeneratedPositive, g.x, g.y);
         for(int i = 0; i != 4; ++i) {
            const Point P = random_point();
            add_pubkey(Provenance::GeneratedPositive, P.x, P.y);
         }
         const Point P = random_point();
         add_pubkey(Provenance::GeneratedNegative, P.x, (P.y + 1) % C().p());
         add_pubkey(Provenance::GeneratedNegative, P.x, P.y + C().p());
         add_pubkey(Provenance::GeneratedNegative, 0, 0);
      }

      void small_subgroup_cases() {
         const Point S = oracle::find_small_subgroup_point(m_ref.desc());
         const mpz_class& q = C().q();
         const unsigned h = C().h();
         Point T = S;
         for(unsigned i = 1; !T.infinity; ++i, T = C().add(T, S)) {
            const mpz_class d = random_key();
            add(KatKind::Derive, Provenance::SmallSubgroup, peer_inputs(d, T.x, T.y), m_ref.derive(d, T.x, T.y));
            add_pubkey(Provenance::SmallSubgroup, T.x, T.y);
            if(m_ref.gost()) {
               // Pick (d, ukm) so that the pre-fix ordering, which reduces
               // h*ukm*d mod q, does not land on the identity by chance.
               mpz_class dv, ukm;
               do {
                  dv = random_key();
                  ukm = random_key();
               } while(C().mul((h * ukm * dv) % q, T).infinity);
               add_vko(Provenance::SmallSubgroup, dv, ukm, T.x, T.y);
            }
         }
         // An honest point with a small-order component: cofactor clearing
         // removes it, so the agreement succeeds.
         for(int i = 0; i != 2; ++i) {
            const Point M = C().add(random_point(), S);
            const mpz_class d = random_key();
            add(KatKind::Derive, Provenance::SmallSubgroup, peer_inputs(d, M.x, M.y), m_ref.derive(d, M.x, M.y));
            if(m_ref.gost()) {
               add_vko(Provenance::SmallSubgroup, d, random_key(), M.x, M.y);
            }
         }
      }

      // Points with x = 0 exist iff b is a square; exercised where they lie
      // in the prime-order subgroup.
      void x0_cases() {
         const auto y = C().sqrt(C().b());
         if(!y || *y == 0) {
            return;
         }
         const Point X0 = Point::affine(0, *y);
         if(!C().mul(C().q(), X0).infinity) {
            return;
         }
         const mpz_class& q = C().q();
         const std::size_t qb = m_ref.qb();
         add_pubkey(Provenance::X0Regression, X0.x, X0.y);
         for(int i = 0; i != 2; ++i) {
            const mpz_class d = random_key();
            // [h*d]peer = X0, so the shared x-coordinate is zero.
            mpz_class inv;
            const mpz_class hd = (C().h() * d) % q;
            mpz_invert(inv.get_mpz_t(), hd.get_mpz_t(), q.get_mpz_t());
            const Point peer = C().mul(inv, X0);
            add(KatKind::Derive, Provenance::X0Regression, peer_inputs(d, peer.x, peer.y), m_ref.derive(d, peer.x, peer.y));
            add(KatKind::Derive, Provenance::X0Regression, peer_inputs(d, X0.x, X0.y), m_ref.derive(d, X0.x, X0.y));
         }
         const Point g = C().generator();
         if(g.x != 0) {
            return;
         }
         // The generator itself has x = 0: d = 1 and q-1 give x = 0 keys,
         // and k = 1 or q-1 forces r = 0.
         const HashSpec hash = m_ref.default_hash();
         for(const mpz_class& d : {mpz_class(1), mpz_class(q - 1)}) {
            add(KatKind::Keygen, Provenance::X0Regression, {{"d", hex_of(d, qb)}}, m_ref.keygen(d));
            const Bytes msg = random_msg();
            const mpz_class sk = random_key();
            add(KatKind::Sign,
                Provenance::X0Regression,
                {{"d", hex_of(sk, qb)}, {"msg", to_hex(msg)}, {"k", hex_of(d, qb)}},
                m_ref.sign(sk, msg, d, hash));
         }
         // A key with Q = g verifies signatures from d = 1.
         const Bytes msg = random_msg();
         const mpz_class k = random_key();
         const auto sig = m_ref.sign(1, msg, k, hash);
         if(sig) {
            KatValues in = m_ref.point_values(g, "Qx", "Qy");
            in["msg"] = to_hex(msg);
            in["r"] = sig->at("r");
            in["s"] = sig->at("s");
            add(KatKind::Verify, Provenance::X0Regression, in, KatValues{});
         }
      }

      Reference m_ref;
      SuiteOptions m_opts;
      std::mt19937_64 m_rng;
      std::vector<KatCase> m_out;
      std::map<std::string, std::size_t> m_counters;
};

// ---- hooks ----------------------------------------------------------------

struct Resolved {
      std::shared_ptr<const Curve> curve;
      const CurveDescriptor* desc;
};

Resolved resolve(const KatCase& c) {
   auto curve = curve_by_name(c.curve);
   return Resolved{curve, &curve->descriptor()};
}

Bytes encode_peer(const Curve& curve, const KatValues& in, const char* xk, const char* yk) {
   const std::size_t fb = curve.field().byte_length();
   auto coord = [&](const char* key) {
      const Bytes raw = strip_leading_zeros(from_hex(in.at(key)));
      return raw.size() <= fb ? pad_left(raw, fb) : raw;
   };
   Bytes out{0x04};
   const Bytes x = coord(xk), y = coord(yk);
   out.insert(out.end(), x.begin(), x.end());
   out.insert(out.end(), y.begin(), y.end());
   return out;
}

Scalar scalar_input(const Curve& curve, const KatValues& in, const char* key) {
   const Bytes b = from_hex(in.at(key));
   if(!curve.scalars().in_keyrange(b)) {
      throw_error(ErrorCode::OutOfRange, std::string(key) + " not in [1, q-1]");
   }
   return curve.scalars().reduce(b);
}

KatValues xy_values(const Curve& curve, const AffinePoint& P, const char* xk, const char* yk) {
   return KatValues{{xk, to_hex(curve.field().encode(P.x))}, {yk, to_hex(curve.field().encode(P.y))}};
}

HashSpec hook_hash(const KatCase& c, const Curve& curve) {
   return c.hash.empty() ? default_hash(curve) : HashSpec::by_name(c.hash);
}

std::optional<KatValues> lib_keygen(const KatCase& c) {
   const auto [curve, desc] = resolve(c);
   const KeyPair kp = keypair_from_secret(*curve, from_hex(c.inputs.at("d")));
   return xy_values(*curve, kp.pk, "Qx", "Qy");
}

std::optional<KatValues> lib_derive(const KatCase& c) {
   const auto [curve, desc] = resolve(c);
   const Scalar sk = scalar_input(*curve, c.inputs, "d");
   const Bytes peer = encode_peer(*curve, c.inputs, "peerX", "peerY");
   if(c.inputs.count("ukm")) {
      const Scalar ukm = scalar_input(*curve, c.inputs, "ukm");
      return KatValues{{"K", to_hex(vko_derive(*curve, sk, peer, ukm, hook_hash(c, *curve)))}};
   }
   return KatValues{{"Z", to_hex(ecdh_derive(*curve, sk, peer))}};
}

std::optional<KatValues> lib_sign(const KatCase& c) {
   const auto [curve, desc] = resolve(c);
   const Scalar sk = scalar_input(*curve, c.inputs, "d");
   const Bytes msg = from_hex(c.inputs.at("msg"));
   NonceMode mode = NonceMode::deterministic();
   if(c.inputs.count("k")) {
      mode = NonceMode::injected(scalar_input(*curve, c.inputs, "k"));
   }
   const Signature sig = is_gost_curve(*desc) ? gost_sign(*curve, sk, msg, mode)
                                              : ecdsa_sign(*curve, sk, msg, hook_hash(c, *curve), mode);
   const ScalarField& sf = curve->scalars();
   return KatValues{{"r", to_hex(sf.encode(sig.r))}, {"s", to_hex(sf.encode(sig.s))}};
}

std::optional<KatValues> lib_verify(const KatCase& c) {
   const auto [curve, desc] = resolve(c);
   const AffinePoint pk = point_decode(*curve, encode_peer(*curve, c.inputs, "Qx", "Qy"));
   const Bytes msg = from_hex(c.inputs.at("msg"));
   const Bytes r = from_hex(c.inputs.at("r"));
   const Bytes s = from_hex(c.inputs.at("s"));
   const bool ok = is_gost_curve(*desc) ? gost_verify(*curve, pk, msg, r, s)
                                        : ecdsa_verify(*curve, pk, msg, r, s, hook_hash(c, *curve));
   return accept(ok);
}

std::optional<KatValues> lib_pubkey(const KatCase& c) {
   const auto [curve, desc] = resolve(c);
   return accept(validate_pubkey_full(*curve, encode_peer(*curve, c.inputs, "Qx", "Qy")));
}

// Validated peer as an oracle point, via the library decoder.
Point oracle_peer(const Curve& curve, const KatValues& in) {
   const AffinePoint P = point_decode(curve, encode_peer(curve, in, "peerX", "peerY"));
   return Point::affine(oracle::to_mpz(curve.field().encode(P.x)), oracle::to_mpz(curve.field().encode(P.y)));
}

mpz_class scalar_mpz(const Curve& curve, const Scalar& k) {
   return oracle::to_mpz(curve.scalars().encode(k));
}

// Derive with a substituted scalar multiplication; mul(k_sk, k_ukm, peer).
std::optional<KatValues> derive_with(const KatCase& c,
                                     const std::function<Point(const Reference&, const mpz_class&, const Point&)>& ecdh,
                                     const std::function<Point(const Reference&, const mpz_class&, const mpz_class&, const Point&)>& vko) {
   const auto [curve, desc] = resolve(c);
   const Reference ref(*desc);
   const mpz_class d = scalar_mpz(*curve, scalar_input(*curve, c.inputs, "d"));
   const Point peer = oracle_peer(*curve, c.inputs);
   if(c.inputs.count("ukm")) {
      const mpz_class ukm = scalar_mpz(*curve, scalar_input(*curve, c.inputs, "ukm"));
      const Point K = vko(ref, d, ukm, peer);
      if(K.infinity) {
         throw_error(ErrorCode::SmallSubgroupResult, "identity");
      }
      return ref.vko_key(K, hook_hash(c, *curve));
   }
   const Point K = ecdh(ref, d, peer);
   if(K.infinity) {
      throw_error(ErrorCode::SmallSubgroupResult, "identity");
   }
   return KatValues{{"Z", hex_of(K.x, ref.fb())}};
}

std::string describe(const KatValues& v) {
   std::string s;
   for(const auto& [k, val] : v) {
      s += (s.empty() ? "" : " ") + k + "=" + val;
   }
   return s.empty() ? "{}" : s;
}

}  // namespace

std::string_view to_string(KatKind k) {
   for(const auto& [v, n] : kKindNames) {
      if(v == k) {
         return n;
      }
   }
   return "unknown";
}

std::string_view to_string(Provenance p) {
   for(const auto& [v, n] : kProvenanceNames) {
      if(v == p) {
         return n;
      }
   }
   return "unknown";
}

KatKind parse_kat_kind(std::string_view s) {
   for(const auto& [v, n] : kKindNames) {
      if(n == s) {
         return v;
      }
   }
   throw_error(ErrorCode::ParseError, "unknown kind " + std::string(s));
}

Provenance parse_provenance(std::string_view s) {
   for(const auto& [v, n] : kProvenanceNames) {
      if(n == s) {
         return v;
      }
   }
   throw_error(ErrorCode::ParseError, "unknown provenance " + std::string(s));
}

std::string_view to_string(Mutant m) {
   switch(m) {
      case Mutant::ConstantScalarMult:
         return "constant-scalar-mult";
      case Mutant::NoCofactorClearing:
         return "no-cofactor-clearing";
      case Mutant::PreFixVko:
         return "pre-fix-vko";
   }
   return "unknown";
}

bool is_gost_curve(const CurveDescriptor& desc) {
   const std::string_view n = desc.name;
   return n.starts_with("id_Gost") || n.starts_with("id_tc26") || n.starts_with("MDCurve");
}

// ---- CAVP -----------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
   while(!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
   }
   while(!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
   }
   return s;
}

std::optional<std::string> cavp_curve(std::string_view section) {
   static const std::map<std::string, std::string, std::less<>> names = {
      {"P-192", "secp192r1"}, {"P-256", "secp256r1"}, {"P-384", "secp384r1"}, {"P-521", "secp521r1"}};
   auto it = names.find(section);
   if(it == names.end()) {
      return std::nullopt;
   }
   return it->second;
}

class CavpParser {
   public:
      explicit CavpParser(std::string_view source) : m_source(source) {}

      void line(std::string_view raw, std::size_t lineno) {
         m_lineno = lineno;
         const std::string_view s = trim(raw);
         if(s.empty()) {
            flush();
            return;
         }
         if(s.front() == '#') {
            return;
         }
         if(s.front() == '[') {
            if(s.back() != ']') {
               fail("unterminated section header");
            }
            flush();
            section(trim(s.substr(1, s.size() - 2)));
            return;
         }
         const auto eq = s.find('=');
         if(eq == std::string_view::npos) {
            fail("expected 'key = value'");
         }
         const std::string key(trim(s.substr(0, eq)));
         const std::string value(trim(s.substr(eq + 1)));
         if(key.empty() || value.empty()) {
            fail("empty key or value");
         }
         if(key == "COUNT") {
            flush();
         }
         m_fields[key] = value;
      }

      CavpParseResult finish() {
         flush();
         return std::move(m_result);
      }

   private:
      [[noreturn]] void fail(const std::string& what) const {
         throw_error(ErrorCode::ParseError, m_source + ":" + std::to_string(m_lineno) + ": " + what);
      }

      void section(std::string_view s) {
         // "[P-256]" or "[P-256,SHA-256]"; other bracketed lines inside a
         // curve section (e.g. "[SHA-256]" on its own) only set the hash.
         const auto comma = s.find(',');
         const std::string_view head = trim(s.substr(0, comma));
         std::string hash;
         if(comma != std::string_view::npos) {
            hash = std::string(trim(s.substr(comma + 1)));
         }
         if(head.starts_with("SHA")) {
            m_hash = std::string(head);
            return;
         }
         m_section = std::string(head);
         m_hash = hash;
         m_curve = cavp_curve(head);
         if(!m_curve) {
            m_result.skipped_sections.push_back(m_section);
         }
      }

      std::string need(const std::map<std::string, std::string>& f, const char* key) const {
         auto it = f.find(key);
         if(it == f.end()) {
            fail(std::string("vector lacks ") + key);
         }
         return lower(it->second);
      }

      void flush() {
         std::map<std::string, std::string> f;
         f.swap(m_fields);
         const bool is_vector = f.count("ZIUT") || f.count("Result") || (f.count("d") && f.count("Qx"));
         if(!is_vector) {
            return;
         }
         if(!m_curve) {
            ++m_result.skipped_vectors;
            return;
         }
         KatCase c;
         c.curve = *m_curve;
         c.provenance = Provenance::Cavp;
         if(f.count("ZIUT")) {
            c.kind = KatKind::Derive;
            c.inputs = {{"d", need(f, "dIUT")}, {"peerX", need(f, "QCAVSx")}, {"peerY", need(f, "QCAVSy")}};
            c.expected = KatValues{{"Z", need(f, "ZIUT")}};
         } else if(f.count("Result") && f.count("R")) {
            c.kind = KatKind::Verify;
            c.hash = lower(m_hash);
            c.inputs = {{"Qx", need(f, "Qx")}, {"Qy", need(f, "Qy")}, {"msg", need(f, "Msg")}, {"r", need(f, "R")}, {"s", need(f, "S")}};
            c.expected = passed(f.at("Result"));
         } else if(f.count("Result")) {
            c.kind = KatKind::PubkeyValidate;
            c.inputs = {{"Qx", need(f, "Qx")}, {"Qy", need(f, "Qy")}};
            c.expected = passed(f.at("Result"));
         } else {
            c.kind = KatKind::Keygen;
            c.inputs = {{"d", need(f, "d")}};
            c.expected = KatValues{{"Qx", need(f, "Qx")}, {"Qy", need(f, "Qy")}};
         }
         const std::string key(to_string(c.kind));
         c.id = m_source + "/" + m_section + "/" + key + "/" + std::to_string(m_counters[m_section + key]++);
         m_result.cases.push_back(std::move(c));
      }

      std::optional<KatValues> passed(const std::string& result) const {
         if(result.starts_with("P")) {
            return KatValues{};
         }
         if(result.starts_with("F")) {
            return std::nullopt;
         }
         fail("Result must be P or F");
      }

      std::string m_source;
      std::size_t m_lineno = 0;
      std::string m_section;
      std::string m_hash;
      std::optional<std::string> m_curve;
      std::map<std::string, std::string> m_fields;
      std::map<std::string, std::size_t> m_counters;
      CavpParseResult m_result;
};

}  // namespace

CavpParseResult parse_cavp(std::string_view text, std::string_view source) {
   CavpParser parser(source);
   std::size_t lineno = 0;
   while(!text.empty()) {
      const auto nl = text.find('\n');
      const std::string_view line = text.substr(0, nl);
      parser.line(line, ++lineno);
      if(nl == std::string_view::npos) {
         break;
      }
      text.remove_prefix(nl + 1);
   }
   return parser.finish();
}

CavpParseResult parse_cavp_file(const std::filesystem::path& path) {
   std::ifstream in(path, std::ios::binary);
   if(!in) {
      throw_error(ErrorCode::NotFound, "cannot open " + path.string());
   }
   std::stringstream ss;
   ss << in.rdbuf();
   return parse_cavp(ss.str(), path.filename().string());
}

// ---- generation -----------------------------------------------------------

std::vector<KatCase> generate_suite(const CurveDescriptor& desc, std::uint64_t seed, const SuiteOptions& opts) {
   if(opts.extreme_bits < 1 || opts.extreme_bits > 16) {
      throw_error(ErrorCode::InvalidArgument, "extreme-key bound must be in [1, 16] bits");
   }
   return Generator(desc, seed, opts).run();
}

// ---- JSON -----------------------------------------------------------------

std::string emit_json(const std::vector<KatCase>& cases) {
   json arr = json::array();
   for(const KatCase& c : cases) {
      json j;
      j["id"] = c.id;
      j["curve"] = c.curve;
      j["kind"] = to_string(c.kind);
      if(!c.hash.empty()) {
         j["hash"] = c.hash;
      }
      j["inputs"] = c.inputs;
      if(c.expected) {
         j["expected"] = *c.expected;
      } else {
         j["expected"] = "FAIL";
      }
      j["provenance"] = to_string(c.provenance);
      arr.push_back(std::move(j));
   }
   return arr.dump(1) + "\n";
}

std::vector<KatCase> parse_json(std::string_view text) {
   std::vector<KatCase> out;
   try {
      const json arr = json::parse(text);
      if(!arr.is_array()) {
         throw_error(ErrorCode::ParseError, "suite must be a JSON array");
      }
      for(const json& j : arr) {
         KatCase c;
         c.id = j.at("id").get<std::string>();
         c.curve = j.at("curve").get<std::string>();
         c.kind = parse_kat_kind(j.at("kind").get<std::string>());
         c.hash = j.value("hash", std::string());
         c.inputs = j.at("inputs").get<KatValues>();
         const json& e = j.at("expected");
         if(e.is_string()) {
            if(e.get<std::string>() != "FAIL") {
               throw_error(ErrorCode::ParseError, c.id + ": expected must be an object or \"FAIL\"");
            }
         } else {
            c.expected = e.get<KatValues>();
         }
         c.provenance = parse_provenance(j.at("provenance").get<std::string>());
         out.push_back(std::move(c));
      }
   } catch(const json::exception& e) {
      throw_error(ErrorCode::ParseError, std::string("suite JSON: ") + e.what());
   }
   return out;
}

// ---- running --------------------------------------------------------------

KatHooks library_hooks() {
   return KatHooks{lib_keygen, lib_derive, lib_sign, lib_verify, lib_pubkey};
}

KatHooks mutant_hooks(Mutant m) {
   KatHooks h = library_hooks();
   switch(m) {
      case Mutant::ConstantScalarMult: {
         auto fixed = [](const Reference& ref, const auto&...) { return ref.curve().generator(); };
         h.keygen = [](const KatCase& c) -> std::optional<KatValues> {
            const auto [curve, desc] = resolve(c);
            keypair_from_secret(*curve, from_hex(c.inputs.at("d")));
            return xy_values(*curve, curve->generator(), "Qx", "Qy");
         };
         h.derive = [fixed](const KatCase& c) { return derive_with(c, fixed, fixed); };
         break;
      }
      case Mutant::NoCofactorClearing:
         h.derive = [](const KatCase& c) {
            return derive_with(
               c,
               [](const Reference& ref, const mpz_class& d, const Point& P) { return ref.curve().mul(d, P); },
               [](const Reference& ref, const mpz_class& d, const mpz_class& ukm, const Point& P) {
                  return ref.curve().mul((ukm * d) % ref.curve().q(), P);
               });
         };
         break;
      case Mutant::PreFixVko:
         h.derive = [lib = h.derive](const KatCase& c) -> std::optional<KatValues> {
            if(!c.inputs.count("ukm")) {
               return lib(c);
            }
            return derive_with(
               c,
               [](const Reference&, const mpz_class&, const Point&) { return Point::identity(); },
               [](const Reference& ref, const mpz_class& d, const mpz_class& ukm, const Point& P) {
                  const oracle::Curve& C = ref.curve();
                  return C.mul((C.h() * ukm * d) % C.q(), P);
               });
         };
         break;
   }
   return h;
}

SuiteResult run_suite(const std::vector<KatCase>& cases, const KatHooks& hooks) {
   SuiteResult res;
   res.results.reserve(cases.size());
   for(const KatCase& c : cases) {
      const KatHooks::Fn* fn = nullptr;
      switch(c.kind) {
         case KatKind::Keygen:
            fn = &hooks.keygen;
            break;
         case KatKind::Derive:
            fn = &hooks.derive;
            break;
         case KatKind::Sign:
            fn = &hooks.sign;
            break;
         case KatKind::Verify:
            fn = &hooks.verify;
            break;
         case KatKind::PubkeyValidate:
            fn = &hooks.pubkey_validate;
            break;
      }
      std::optional<KatValues> got;
      std::string error;
      try {
         if(!*fn) {
            throw_error(ErrorCode::Unsupported, "no hook for " + std::string(to_string(c.kind)));
         }
         got = (*fn)(c);
         if(!got) {
            error = "rejected";
         }
      } catch(const std::exception& e) {
         got.reset();
         error = e.what();
      }

      CaseResult r;
      if(c.expects_failure()) {
         r.pass = !got.has_value();
         if(!r.pass) {
            r.detail = "expected FAIL, got success";
         }
      } else if(!got) {
         r.detail = "expected success, got " + error;
      } else {
         r.pass = true;
         for(const auto& [key, want] : *c.expected) {
            auto it = got->find(key);
            if(it == got->end() || lower(it->second) != lower(want)) {
               r.pass = false;
               r.detail = key + " mismatch: expected " + lower(want) + ", got " + (it == got->end() ? "nothing" : lower(it->second));
               break;
            }
         }
         if(r.pass && c.expected->empty() && !got->empty()) {
            r.pass = false;
            r.detail = "unexpected output " + describe(*got);
         }
      }
      (r.pass ? res.passed : res.failed)++;
      res.results.push_back(std::move(r));
   }
   return res;
}

std::string emit_tap(const std::vector<KatCase>& cases, const SuiteResult& results) {
   std::string out = "1.." + std::to_string(cases.size()) + "\n";
   for(std::size_t i = 0; i != cases.size(); ++i) {
      const CaseResult* r = i < results.results.size() ? &results.results[i] : nullptr;
      const bool pass = r && r->pass;
      out += (pass ? "ok " : "not ok ") + std::to_string(i + 1) + " - " + cases[i].id;
      if(!pass) {
         out += " # " + (r ? r->detail : std::string("not run"));
      }
      out += "\n";
   }
   return out;
}

}  // namespace ctec
