#include "test_util.hpp"

#include <ctec/error.hpp>
#include <ctec/hash.hpp>
#include <ctec/scalar.hpp>

#include <gtest/gtest.h>

using namespace ctec;

namespace {

const char* kP256 = "ffffffff00000001000000000000000000000000ffffffffffffffffffffffff";
const char* kQ256 = "ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551";

FieldElement fe(const Field& F, std::string_view hex) {
   return F.decode(pad_left(from_hex(hex), F.byte_length()));
}

std::string hx(const Field& F, const FieldElement& x) {
   return to_hex(F.encode(x));
}

}  // namespace

TEST(Field, FrozenP256Values) {
   const Field F(from_hex(kP256));
   const auto x = fe(F, "0123456789abcdef0123456789abcdef0123456789abcdef0123456789abcdef");
   const auto y = fe(F, "fedcba9876543210fedcba9876543210fedcba9876543210fedcba9876543210");
   EXPECT_EQ(hx(F, F.mul(x, y)), "75e0fb4dfbe38a54f2f1809043cd2b48a801bd52c02492164d2810a05c7a8411");
   EXPECT_EQ(hx(F, F.inv(x)), "de81eb370af1f92cc7b6d08f0a124a1ec6de1a033b9b93de117b5254f0490691");
   EXPECT_TRUE(F.constants_consistent());
}

TEST(Field, MatchesGmpOnEveryCurve) {
   std::mt19937_64 rng(11);
   for(const auto& d : bundled_database().curves()) {
      const Field F(d.p);
      const mpz_class p = oracle::to_mpz(d.p);
      for(int i = 0; i != 40; ++i) {
         const mpz_class a = test::random_scalar(rng, p) - 1;
         const mpz_class b = test::random_scalar(rng, p) - 1;
         const auto A = F.decode(oracle::to_bytes(a, F.byte_length()));
         const auto B = F.decode(oracle::to_bytes(b, F.byte_length()));
         auto val = [&](const FieldElement& x) { return oracle::to_mpz(F.encode(x)); };
         mpz_class t;
         EXPECT_EQ(val(F.add(A, B)), mpz_class((a + b) % p)) << d.name;
         t = (a - b) % p;
         if(t < 0) {
            t += p;
         }
         EXPECT_EQ(val(F.sub(A, B)), t) << d.name;
         EXPECT_EQ(val(F.mul(A, B)), mpz_class((a * b) % p)) << d.name;
         EXPECT_EQ(val(F.sqr(A)), mpz_class((a * a) % p)) << d.name;
         if(a != 0) {
            EXPECT_EQ(val(F.mul(F.inv(A), A)), 1) << d.name;
         }
         EXPECT_EQ(val(F.select(1, A, B)), a);
         EXPECT_EQ(val(F.select(0, A, B)), b);
      }
   }
}

TEST(Field, ZeroInverse) {
   const Field F(from_hex(kP256));
   try {
      F.inv(F.zero());
      FAIL();
   } catch(const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ZeroInverse);
   }
   EXPECT_EQ(F.inv_or_zero(F.zero()), F.zero());
}

TEST(Field, DecodeChecksWidthAndRange) {
   const Field F(from_hex(kP256));
   EXPECT_THROW(F.decode(Bytes(31, 0)), Error);
   try {
      F.decode(from_hex(kP256));
      FAIL();
   } catch(const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
   }
   try {
      F.decode(Bytes(33, 0));
      FAIL();
   } catch(const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadLength);
   }
   const Bytes one = pad_left(Bytes{1}, 32);
   EXPECT_EQ(F.encode(F.decode(one)), one);
}

TEST(Field, RejectsEvenModulus) {
   EXPECT_THROW(Field(Bytes{0x10, 0x00}), Error);
}

TEST(Scalar, HashToScalarModes) {
   const ScalarField sf(from_hex(kQ256));
   const Bytes d = HashSpec::sha512().digest(test::bytes_of("abc"));
   // ECDSA keeps the leftmost 256 bits.
   EXPECT_EQ(to_hex(sf.encode(sf.mod_wide(d, HashMode::Ecdsa))),
             "ddaf35a193617abacc417349ae20413112e6fa4e89a97ea20a9eeee64b55d39a");

   const ScalarField gost(from_hex("400000000000000000000000000000000fd8cddfc87b6635c115af556c360c67"));
   EXPECT_EQ(to_hex(gost.encode(gost.mod_wide(d, HashMode::Gost))),
             "30d7beb406484e81cfc5d591f0aeb2a3bee8a35a51c260b2ec6a12a013f159ae");
}

TEST(Scalar, GostModeMapsZeroToOne) {
   const ScalarField sf(from_hex(kQ256));
   EXPECT_EQ(sf.mod_wide(from_hex(kQ256), HashMode::Gost), sf.one());
   EXPECT_EQ(sf.mod_wide(Bytes(32, 0), HashMode::Gost), sf.one());
   EXPECT_EQ(sf.mod_wide(Bytes(32, 0), HashMode::Ecdsa), sf.zero());
}

TEST(Scalar, EcdsaTruncationOn521) {
   const auto& q = bundled_database().get("secp521r1").q;
   const ScalarField sf(q);
   // The leftmost 521 bits are 2^521 - 1, one reduction above q.
   EXPECT_EQ(oracle::to_mpz(sf.encode(sf.mod_wide(Bytes(66, 0xff), HashMode::Ecdsa))),
             oracle::from_hex("5ae79787c40d069948033feb708f65a2fc44a36477663b851449048e16ec79bf6"));
   // A 512-bit digest is shorter than q: no truncation, value kept.
   const Bytes d = HashSpec::sha512().digest(test::bytes_of("abc"));
   EXPECT_EQ(oracle::to_mpz(sf.encode(sf.mod_wide(d, HashMode::Ecdsa))), oracle::to_mpz(d));
}

TEST(Scalar, ArithmeticAndRange) {
   const ScalarField sf(from_hex(kQ256));
   const mpz_class q = oracle::to_mpz(from_hex(kQ256));
   std::mt19937_64 rng(5);
   for(int i = 0; i != 50; ++i) {
      const mpz_class a = test::random_scalar(rng, q), b = test::random_scalar(rng, q);
      const Scalar A = sf.reduce(oracle::to_bytes(a)), B = sf.reduce(oracle::to_bytes(b));
      EXPECT_EQ(oracle::to_mpz(sf.encode(sf.mul(A, B))), mpz_class(a * b % q));
      EXPECT_EQ(oracle::to_mpz(sf.encode(sf.add(A, B))), mpz_class((a + b) % q));
      EXPECT_EQ(sf.mul(sf.inv(A), A), sf.one());
   }
   EXPECT_FALSE(sf.in_keyrange(Bytes{0}));
   EXPECT_TRUE(sf.in_keyrange(Bytes{1}));
   EXPECT_FALSE(sf.in_keyrange(from_hex(kQ256)));
   EXPECT_TRUE(sf.in_keyrange(oracle::to_bytes(q - 1)));
   EXPECT_TRUE(sf.in_keyrange(Bytes{0, 0, 0, 5}));
   EXPECT_THROW(sf.inv(sf.zero()), Error);
}

TEST(Scalar, CofactorMultipleIsUnreduced) {
   const ScalarField sf(from_hex(kQ256));
   const mpz_class q = oracle::to_mpz(from_hex(kQ256));
   const Scalar k = sf.reduce(oracle::to_bytes(q - 1));
   const WideScalar w = sf.cofactor_multiple(k, 4);
   EXPECT_EQ(w.bits, sf.bit_length() + 3);
   mpz_class v = 0;
   for(std::size_t i = kMaxLimbs; i-- > 0;) {
      v <<= kLimbBits;
      v += static_cast<unsigned long>(w.limbs[i]);
   }
   EXPECT_EQ(v, mpz_class(4 * (q - 1)));
}
