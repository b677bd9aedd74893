#include <gtest/gtest.h>

#include "spinnet/verify.hpp"

using namespace spinnet;

TEST(VerifyGrid, BEZero) {
  const auto r = verify_grid(0, GridKind::BE);
  EXPECT_EQ(r.instances, 1u);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.summary(), "1 instances, 0 failures");
}

TEST(VerifyGrid, OrthogonalityTwo) {
  const auto r = verify_grid(2, GridKind::Orthogonality);
  EXPECT_GT(r.instances, 0u);
  EXPECT_EQ(r.failures, 0u);
}

TEST(VerifyGrid, PachnerTwo) {
  EXPECT_EQ(verify_grid(2, GridKind::Pachner23).failures, 0u);
  EXPECT_EQ(verify_grid(2, GridKind::Pachner14).failures, 0u);
}

TEST(VerifyGrid, LiteralFormFails) {
  VerifyOptions o;
  o.be_form = BEForm::Unweighted;
  const auto r = verify_grid(2, GridKind::BE, o);
  EXPECT_GT(r.failures, 0u);
}

TEST(VerifyGrid, Ceiling) {
  EXPECT_THROW(verify_grid(7, GridKind::BE), CeilingExceeded);
  VerifyOptions o;
  o.ceiling = 1;
  EXPECT_THROW(verify_grid(2, GridKind::BE, o), CeilingExceeded);
  EXPECT_NO_THROW(verify_grid(1, GridKind::BE, o));
}

TEST(VerifyGrid, DeterministicAcrossJobs) {
  auto collect = [](unsigned jobs) {
    std::vector<std::string> out;
    VerifyOptions o;
    o.jobs = jobs;
    o.sink = [&](const VerifyRecord& r) {
      std::string s;
      for (const auto& [n, j] : r.instance) s += n + j.to_string() + " ";
      out.push_back(s + r.result.lhs.to_string());
    };
    verify_grid(2, GridKind::BE, o);
    return out;
  };
  const auto one = collect(1);
  EXPECT_EQ(one, collect(3));
}

TEST(VerifyGrid, CanonicalOrder) {
  std::vector<std::vector<int>> seen;
  VerifyOptions o;
  o.jobs = 2;
  o.sink = [&](const VerifyRecord& r) {
    std::vector<int> t;
    for (const auto& [n, j] : r.instance) t.push_back(j.twice());
    seen.push_back(t);
  };
  verify_grid(2, GridKind::Orthogonality, o);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}
