#include <gtest/gtest.h>

#include <set>

#include "irn/classifier.hpp"
#include "irn/errors.hpp"
#include "irn/index_sigma.hpp"
#include "support/oracle.hpp"

namespace irn {
namespace {

using Members = std::vector<std::uint64_t>;

Members vec(std::span<const std::uint64_t> s) { return {s.begin(), s.end()}; }

TEST(IndexRatio, Examples) {
  EXPECT_TRUE(is_index_ratio(8));
  EXPECT_FALSE(is_index_ratio(4));
  EXPECT_TRUE(is_index_ratio(1));
  EXPECT_FALSE(is_index_ratio(12));
}

TEST(ScanRange, SmallRange) {
  const auto t = scan_range(1, 10);
  EXPECT_EQ(vec(t.members(Rational(2))), (Members{2, 6, 8, 10}));
  EXPECT_EQ(vec(t.members(Rational::of(2, 5))), (Members{4}));
  EXPECT_EQ(vec(t.members(Rational(3))), (Members{3}));
  EXPECT_EQ(vec(t.members(Rational(5))), (Members{5}));
  EXPECT_EQ(vec(t.members(Rational(7))), (Members{7}));
  EXPECT_EQ(vec(t.members(Rational::of(3, 10))), (Members{9}));
  EXPECT_EQ(vec(t.members(Rational())), (Members{1}));
  EXPECT_EQ(t.classes().size(), 7u);
  EXPECT_EQ(t.range()->lo, 1u);
  EXPECT_EQ(t.range()->hi, 10u);
  EXPECT_TRUE(t.members(Rational(11)).empty());
}

TEST(ScanRange, SingleElement) {
  const auto t = scan_range(1, 1);
  ASSERT_EQ(t.classes().size(), 1u);
  EXPECT_EQ(vec(t.members(Rational())), (Members{1}));
}

TEST(ScanRange, RejectsBadRanges) {
  EXPECT_THROW(scan_range(0, 10), DomainError);
  EXPECT_THROW(scan_range(10, 9), DomainError);
}

TEST(ScanRange, PartitionProperty) {
  const std::uint64_t N = 10000;
  const auto t = scan_range(1, N);
  std::set<std::uint64_t> seen;
  std::size_t total = 0;
  for (const auto& [k, members] : t.classes()) {
    ASSERT_TRUE(std::is_sorted(members.begin(), members.end()));
    for (auto n : members) {
      ASSERT_EQ(k_ratio(n), k);
      seen.insert(n);
    }
    total += members.size();
  }
  EXPECT_EQ(total, N);
  EXPECT_EQ(seen.size(), N);
  EXPECT_EQ(*seen.begin(), 1u);
  EXPECT_EQ(*seen.rbegin(), N);
  EXPECT_EQ(t.member_count(), N);
}

TEST(ScanRange, MatchesBruteForceOracle) {
  const auto t = scan_range(1, 3000);
  for (const auto& [k, members] : t.classes())
    for (auto n : members) {
      const auto [num, den] = oracle::k_pair(n);
      ASSERT_EQ(k, Rational::of(num, den)) << n;
    }
}

TEST(ScanRange, DeterministicAcrossWorkersAndChunks) {
  const auto reference = scan_range(1, 50000);
  for (unsigned workers : {1u, 2u, 8u})
    for (std::uint64_t chunk : {1000ull, 4099ull, 65536ull}) {
      ScanOptions opts;
      opts.workers = workers;
      opts.chunk_size = chunk;
      ASSERT_EQ(scan_range(1, 50000, opts), reference) << workers << "/" << chunk;
    }
  SieveTable sieve(50000);
  ScanOptions with_sieve;
  with_sieve.sieve = &sieve;
  with_sieve.workers = 2;
  EXPECT_EQ(scan_range(1, 50000, with_sieve), reference);
}

TEST(MergeTables, SplitScanEqualsWholeScan) {
  EXPECT_EQ(merge_tables(scan_range(1, 5000), scan_range(5001, 10000)), scan_range(1, 10000));
  EXPECT_EQ(merge_tables(scan_range(1, 50), scan_range(51, 100)), scan_range(1, 100));
  EXPECT_EQ(merge_tables(scan_range(51, 100), scan_range(1, 50)), scan_range(1, 100));
}

TEST(MergeTables, IdentityAndAssociativity) {
  const auto t = scan_range(7, 300);
  EXPECT_EQ(merge_tables(GkTable(), t), t);
  EXPECT_EQ(merge_tables(t, GkTable()), t);
  const auto a = scan_range(1, 40), b = scan_range(41, 90), c = scan_range(91, 200);
  EXPECT_EQ(merge_tables(merge_tables(a, b), c), merge_tables(a, merge_tables(b, c)));
  EXPECT_EQ(merge_tables(c, merge_tables(a, b)), scan_range(1, 200));
}

TEST(MergeTables, RejectsOverlapAndGap) {
  EXPECT_THROW(merge_tables(scan_range(1, 50), scan_range(50, 100)), RangeError);
  EXPECT_THROW(merge_tables(scan_range(1, 50), scan_range(52, 100)), RangeError);
}

TEST(GkTable, AddValidatesInput) {
  GkTable t(1, 10);
  t.add(Rational(2), 2);
  EXPECT_THROW(t.add(Rational(2), 11), DomainError);
  EXPECT_THROW(t.add(Rational(2), 2), DomainError);
  t.add(Rational(2), 6);
  EXPECT_EQ(t.member_count(), 2u);
  EXPECT_THROW(GkTable(5, 4), DomainError);
}

TEST(GkTable, SmallestMemberOrder) {
  const auto t = scan_range(1, 100);
  const auto ordered = t.by_smallest_member();
  ASSERT_EQ(ordered.size(), t.classes().size());
  for (std::size_t i = 1; i < ordered.size(); ++i) ASSERT_LT(ordered[i - 1].second.front(), ordered[i].second.front());
  EXPECT_EQ(ordered.front().first, Rational());
  EXPECT_EQ(ordered[1].first, Rational(2));
}

TEST(MembersOfK, TableRows) {
  const auto g = members_of_k(Rational::of(47, 25), 100000);
  ASSERT_GE(g.size(), 9u);
  EXPECT_EQ(Members(g.begin(), g.begin() + 5), (Members{30, 646, 930, 1110, 1230}));
  EXPECT_EQ(Members(g.end() - 4, g.end()), (Members{99570, 99690, 99870, 99930}));
  EXPECT_EQ(members_of_k(Rational::of(7109, 15862), 100000), (Members{11025}));
  EXPECT_EQ(members_of_k(Rational::of(2, 5), 100000), (Members{4}));
  EXPECT_TRUE(members_of_k(Rational::of(7109, 15862), 10).empty());
}

TEST(MembersOfK, SeveralKeysInOnePass) {
  const Rational keys[] = {Rational(5), Rational::of(3, 10), Rational(2)};
  const auto lists = members_of_keys(keys, 2000);
  ASSERT_EQ(lists.size(), 3u);
  EXPECT_EQ(lists[0], members_of_k(Rational(5), 2000));
  EXPECT_EQ(lists[1], (Members{9}));
  EXPECT_EQ(lists[2], members_of_k(Rational(2), 2000));
}

TEST(MembersOfK, ContainsItsOwnArgument) {
  const auto t = scan_range(1, 10000);
  for (std::uint64_t n = 1; n <= 10000; n += 37) {
    const auto members = members_of_k(k_ratio(n), n);
    ASSERT_FALSE(members.empty());
    ASSERT_EQ(members.back(), n);
  }
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto m = t.members(k_ratio(n));
    ASSERT_TRUE(std::binary_search(m.begin(), m.end(), n)) << n;
  }
}

TEST(EnumerateIndexRatio, Prefix) {
  EXPECT_EQ(enumerate_index_ratio(32),
            (Members{1, 2, 3, 5, 6, 7, 8, 10, 11, 13, 14, 15, 17, 18, 19, 21, 22, 23, 26, 27, 29, 31, 32}));
  EXPECT_EQ(enumerate_index_ratio(1), (Members{1}));
  const auto twelve = enumerate_index_ratio(12);
  EXPECT_EQ(std::find(twelve.begin(), twelve.end(), 12u), twelve.end());
}

TEST(EnumerateIndexRatio, MatchesDenominatorOneUpTo10k) {
  Members expected;
  for (std::uint64_t n = 1; n <= 10000; ++n)
    if (k_ratio(n).is_integer()) expected.push_back(n);
  EXPECT_EQ(enumerate_index_ratio(10000), expected);
  ScanOptions opts;
  opts.workers = 3;
  opts.chunk_size = 777;
  EXPECT_EQ(enumerate_index_ratio(10000, opts), expected);
}

TEST(EvenIndexRatio, IntegralKIsTwoUpToOneMillion) {
  SieveTable sieve(1000000);
  ScanOptions opts;
  opts.sieve = &sieve;
  opts.workers = 4;
  const auto members = enumerate_index_ratio(1000000, opts);
  std::size_t even = 0;
  for (auto n : members) {
    if (n % 2 != 0) continue;
    ++even;
    ASSERT_EQ(make_profile(sieve.factorize(n)).k, Rational(2)) << n;
  }
  EXPECT_GT(even, 0u);
}

}  // namespace
}  // namespace irn
