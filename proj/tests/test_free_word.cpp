#include "burau/free_word.hpp"

#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <vector>

using namespace burau;

namespace {
FreeWord f(int rank, int gen, int exp = 1) { return FreeWord::generator(rank, gen, exp); }
}  // namespace

TEST_CASE("multiply reduces", "[free-words]") {
  const int r = 3;
  CHECK((f(r, 1) * f(r, 1, -1)).is_identity());
  CHECK(f(r, 1) * f(r, 2) * (f(r, 2, -1) * f(r, 1)) == f(r, 1, 2));
  CHECK((ad(f(r, 1), f(r, 2)) * ad(f(r, 1), f(r, 2, -1))).is_identity());
  CHECK_THROWS(f(2, 1) * f(3, 1));
}

TEST_CASE("ad and commutator", "[free-words]") {
  const int r = 3;
  CHECK(ad(f(r, 1), f(r, 2)) == FreeWord(r, {{1, 1}, {2, 1}, {1, -1}}));
  CHECK(ad(FreeWord(r), f(r, 2)) == f(r, 2));
  CHECK(ad(f(r, 1), f(r, 1)) == f(r, 1));
  CHECK(commutator(f(r, 1), f(r, 2)) == FreeWord(r, {{1, 1}, {2, 1}, {1, -1}, {2, -1}}));
  CHECK(commutator(f(r, 1), f(r, 1)).is_identity());
  CHECK(commutator(f(r, 3), FreeWord(r)).is_identity());
}

TEST_CASE("apply_endomorphism", "[free-words]") {
  const int r = 3;
  const std::vector<FreeWord> images{ad(f(r, 1), f(r, 2)), f(r, 1), f(r, 3)};
  CHECK(apply_endomorphism(images, f(r, 2)) == f(r, 1));
  CHECK(apply_endomorphism(images, f(r, 1) * f(r, 2)) == f(r, 1) * f(r, 2));
  const auto id = identity_images(r);
  for (int trial = 0; trial < 100; ++trial) {
    const FreeWord w = testing::random_word(r, 12);
    CHECK(apply_endomorphism(id, w) == w);
  }
}

TEST_CASE("group laws on random words", "[free-words][property]") {
  for (int trial = 0; trial < 500; ++trial) {
    const int r = testing::uniform(1, 4);
    const FreeWord a = testing::random_word(r, 10), b = testing::random_word(r, 10), c = testing::random_word(r, 10);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK(inverse(a * b) == inverse(b) * inverse(a));
    CHECK((a * b).exponent_sum() == a.exponent_sum() + b.exponent_sum());
    CHECK(power(a, 3) == a * a * a);
    CHECK(power(a, -2) == inverse(a * a));
    // canonical form: no adjacent syllables share a generator
    const auto& ls = (a * b).letters();
    for (std::size_t k = 1; k < ls.size(); ++k) CHECK(ls[k].gen != ls[k - 1].gen);
  }
}

TEST_CASE("endomorphisms are homomorphisms", "[free-words][property]") {
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 3;
    std::vector<FreeWord> images;
    for (int k = 0; k < r; ++k) images.push_back(testing::random_word(r, 4));
    const FreeWord a = testing::random_word(r, 8), b = testing::random_word(r, 8);
    CHECK(apply_endomorphism(images, a * b) == apply_endomorphism(images, a) * apply_endomorphism(images, b));
    CHECK(apply_endomorphism(images, a.inverse()) == apply_endomorphism(images, a).inverse());
  }
}

TEST_CASE("formatting and rank checks", "[free-words]") {
  CHECK(FreeWord(3, {{1, 1}, {2, -1}, {3, 2}}).to_string() == "f1 f2^-1 f3^2");
  CHECK(FreeWord(2).to_string() == "1");
  CHECK(FreeWord(2, {{1, 2}, {1, -2}}).is_identity());
  CHECK_THROWS(FreeWord(0));
  CHECK_THROWS(f(2, 3));
}
