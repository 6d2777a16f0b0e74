#include "qdet/errors.hpp"
#include "qdet/gaussian_rational.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using qdet::GQ;
using qdet::kI;

namespace {

GQ frac(long p, long q) { return GQ::fraction(p, q); }

bool canonical(const mpq_class& v) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return v.get_den() > 0 && g == 1;
}

}  // namespace

TEST(GaussianRational, AddsFractions) { EXPECT_EQ(frac(1, 2) + frac(1, 3), frac(5, 6)); }

TEST(GaussianRational, ImaginaryUnitSquaresToMinusOne) { EXPECT_EQ(kI * kI, GQ(-1)); }

TEST(GaussianRational, DividesByConjugate) {
    const GQ expected(mpq_class(1, 2), mpq_class(-1, 2));
    EXPECT_EQ(GQ(1) / (GQ(1) + kI), expected);
}

TEST(GaussianRational, SubtractAndNegate) {
    EXPECT_EQ(frac(1, 2) - frac(1, 3), frac(1, 6));
    EXPECT_EQ(-(GQ(2) + kI), GQ(-2) - kI);
}

TEST(GaussianRational, DivisionByZeroThrows) {
    EXPECT_THROW((void)(GQ(1) / GQ(0)), qdet::DivisionByZero);
    EXPECT_THROW((void)GQ(0).inverse(), qdet::DivisionByZero);
}

TEST(GaussianRational, Powers) {
    EXPECT_EQ(pow(GQ(2), -1), frac(1, 2));
    EXPECT_EQ(pow(GQ(1) + kI, 2), GQ(2) * kI);
    EXPECT_EQ(pow(frac(-7, 3) + kI, 0), GQ(1));
    EXPECT_EQ(pow(GQ(3), 5), GQ(243));
    EXPECT_EQ(pow(kI, -3), kI);
    EXPECT_THROW((void)pow(GQ(0), -2), qdet::DivisionByZero);
    EXPECT_EQ(pow(GQ(0), 0), GQ(1));
}

TEST(GaussianRational, FormatAndParse) {
    EXPECT_EQ(GQ::parse("3/4+1/2i").to_string(), "3/4+1/2i");
    EXPECT_EQ(GQ().to_string(), "0");
    EXPECT_EQ(GQ::parse("-2/6"), frac(-1, 3));
    EXPECT_EQ(GQ::parse("-2/6").to_string(), "-1/3");
    EXPECT_EQ(GQ::parse("2i"), GQ(2) * kI);
    EXPECT_EQ(GQ::parse("-i"), -kI);
    EXPECT_EQ(GQ::parse("-1-1i"), GQ(-1) - kI);
    EXPECT_EQ((GQ(2) * kI).to_string(), "2i");
    EXPECT_EQ((GQ(-1) - kI).to_string(), "-1-1i");
    std::ostringstream os;
    os << frac(6, -4);
    EXPECT_EQ(os.str(), "-3/2");
}

TEST(GaussianRational, ParseErrorsCarryPosition) {
    for (const char* bad : {"", "abc", "1/", "1/0", "3/4+", "1+2", "1//2", "2i3"}) {
        try {
            (void)GQ::parse(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const qdet::ParseError& e) {
            EXPECT_LE(e.position(), std::string_view(bad).size()) << bad;
        }
    }
}

TEST(GaussianRational, ZeroIsUnique) {
    const GQ z = (frac(1, 3) + kI) - (frac(2, 6) + kI);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z, GQ());
    EXPECT_EQ(z.to_string(), "0");
}

TEST(GaussianRationalProperty, FieldAxioms) {
    qdet::testing::RandomGQ rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const GQ x = rng.value(), y = rng.value(), z = rng.value();
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + (-x), GQ(0));
        EXPECT_EQ(x * x.inverse(), GQ(1));
        EXPECT_EQ(x * pow(x, -1), GQ(1));
        EXPECT_EQ(x * GQ(1), x);
        EXPECT_EQ(x + GQ(0), x);
        EXPECT_EQ((x / y) * y, x);
    }
}

TEST(GaussianRationalProperty, CanonicalFormAfterEveryOperation) {
    qdet::testing::RandomGQ rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const GQ x = rng.value(), y = rng.value();
        for (const GQ& v : {x + y, x - y, x * y, x / y, pow(x, 3), pow(y, -2)}) {
            EXPECT_TRUE(canonical(v.real()));
            EXPECT_TRUE(canonical(v.imag()));
        }
    }
}

TEST(GaussianRationalProperty, CodecRoundTripIsIdempotent) {
    qdet::testing::RandomGQ rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const GQ v = rng.value() * rng.value() - rng.value();
        const std::string once = v.to_string();
        EXPECT_EQ(GQ::parse(once), v);
        EXPECT_EQ(GQ::parse(once).to_string(), once);
    }
}

TEST(GaussianRationalProperty, PowerLaws) {
    qdet::testing::RandomGQ rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const GQ x = rng.value();
        const long m = rng.integer(-5, 5), n = rng.integer(-5, 5);
        EXPECT_EQ(pow(x, m) * pow(x, n), pow(x, m + n));
        EXPECT_EQ(pow(pow(x, m), n), pow(x, m * n));
    }
}
