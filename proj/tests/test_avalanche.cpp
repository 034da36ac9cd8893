#include <gtest/gtest.h>

#include "separ/analysis/avalanche.hpp"
#include "separ/analysis/complexity.hpp"
#include "separ/errors.hpp"
#include "separ/hex.hpp"

using namespace separ;
using namespace separ::analysis;

namespace {

const MasterKey kKey = MasterKey::from_hex("E8B9B733DA5D96D702DD3972E95307FD50C512DBF44A233E8D1E9DF5FC7D6371");
const std::vector<std::uint8_t> kPt = from_hex("156F19E18FE6297519A352C45731536A");

}  // namespace

TEST(Avalanche, NoFlipNoChange) {
  const auto r = avalanche(kKey, Nonce{}, kPt, {FlipTarget::None, 0});
  EXPECT_EQ(r.distance, 0u);
  EXPECT_EQ(r.bits, 128u);
  EXPECT_EQ(r.base_ct, r.flipped_ct);
}

TEST(Avalanche, ReportsCiphertexts) {
  const auto r = avalanche(kKey, Nonce{}, kPt, {FlipTarget::Plaintext, 3});
  EXPECT_EQ(r.base_ct, to_hex(Separ(kKey).encrypt_message(Nonce{}, kPt)));
  auto pt = kPt;
  pt[0] ^= 0x10;
  EXPECT_EQ(r.flipped_ct, to_hex(Separ(kKey).encrypt_message(Nonce{}, pt)));
  EXPECT_GT(r.distance, 0u);
}

TEST(Avalanche, FlipTargets) {
  const auto k = avalanche(kKey, Nonce{}, kPt, {FlipTarget::Key, 255});
  const auto iv = avalanche(kKey, Nonce{}, kPt, {FlipTarget::Iv, 19});
  EXPECT_GT(k.distance, 0u);
  EXPECT_GT(iv.distance, 0u);
  Nonce n;
  n.words[1] = 0x1000;
  EXPECT_EQ(iv.flipped_ct, to_hex(Separ(kKey).encrypt_message(n, kPt)));
}

TEST(Avalanche, RangeChecks) {
  EXPECT_THROW(avalanche(kKey, Nonce{}, kPt, {FlipTarget::Plaintext, 128}), std::out_of_range);
  EXPECT_THROW(avalanche(kKey, Nonce{}, kPt, {FlipTarget::Key, 256}), std::out_of_range);
  EXPECT_THROW(avalanche(kKey, Nonce{}, kPt, {FlipTarget::Iv, 128}), std::out_of_range);
  const std::vector<std::uint8_t> odd = {1, 2, 3};
  EXPECT_THROW(avalanche(kKey, Nonce{}, odd, {FlipTarget::None, 0}), PaddingError);
}

TEST(Avalanche, TrialsAreSeeded) {
  const auto a = avalanche_trials(kKey, Nonce{}, kPt, FlipTarget::Plaintext, 50, 7);
  const auto b = avalanche_trials(kKey, Nonce{}, kPt, FlipTarget::Plaintext, 50, 7);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.trials, 50u);
  EXPECT_LE(a.min, a.max);
  EXPECT_LE(a.max, 128u);
}

TEST(Avalanche, FirstWordFlipsReachWholeMessage) {
  // A change in word 0 feeds every later state update.
  const auto s = avalanche_trials(kKey, Nonce{}, kPt, FlipTarget::Plaintext, 200, 11, 16);
  EXPECT_GT(s.mean, 54.0);
  EXPECT_LT(s.mean, 74.0);
}

TEST(Avalanche, LastWordFlipsStayLocal) {
  const auto s = avalanche_trials(kKey, Nonce{}, kPt, FlipTarget::Plaintext, 100, 13, 128);
  const auto r = avalanche(kKey, Nonce{}, kPt, {FlipTarget::Plaintext, 127});
  EXPECT_LE(r.distance, 16u);
  EXPECT_LT(s.mean, 54.0);
}

TEST(Complexity, PublishedCounts) {
  EXPECT_EQ(algebraic_complexity(18, 16, 32), (AlgebraicComplexity{320, 6720, 2560}));
  EXPECT_EQ(algebraic_complexity(0, 0, 0), (AlgebraicComplexity{0, 0, 0}));
  EXPECT_EQ(algebraic_complexity_of(527), (AlgebraicComplexity{527, 11067, 4216}));
  EXPECT_EQ(algebraic_complexity(20, 16, 32).equations, 352u * 21);
}
