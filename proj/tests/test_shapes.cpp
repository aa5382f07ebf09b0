#include <gtest/gtest.h>

#include <set>

#include "skewnabla/shapes.hpp"

using namespace skewnabla;

TEST(Partition, MembershipExamples) {
  EXPECT_NO_THROW(make_partition({3, 1, 0}));
  EXPECT_NO_THROW(make_partition({2, 2, 1}));
  EXPECT_THROW(make_partition({2, 1, -1}), PartitionError);
  EXPECT_THROW(make_partition({1, 2, 1}), PartitionError);
  EXPECT_EQ(make_partition({}).nvars(), 0u);
}

TEST(Partition, ErrorNamesFirstViolation) {
  try {
    make_partition({3, 3, 1, 2});
    FAIL();
  } catch (const PartitionError& e) {
    EXPECT_NE(std::string(e.what()).find("3,4"), std::string::npos);
  }
}

TEST(Partition, RemoveBox) {
  EXPECT_EQ(remove_box({3, 2, 1}, 2), (Partition{3, 1, 1}));
  EXPECT_FALSE(remove_box({1, 1}, 1).has_value());
  EXPECT_FALSE(remove_box({0, 0}, 2).has_value());
  EXPECT_THROW(remove_box({1, 1}, 0), IndexError);
  EXPECT_THROW(remove_box({1, 1}, 3), IndexError);
}

TEST(Partition, AddBox) {
  EXPECT_FALSE(add_box({1, 1, 0}, 2).has_value());
  EXPECT_EQ(add_box({1, 1, 0}, 1), (Partition{2, 1, 0}));
  EXPECT_EQ(add_box({0, 0}, 1), (Partition{1, 0}));
  EXPECT_THROW(add_box({0, 0}, 5), IndexError);
}

TEST(Partition, Content) {
  EXPECT_EQ(content({3, 2, 1}).values, (std::vector<int>{2, 0, -2}));
  EXPECT_EQ(content({1, 1, 0}).values, (std::vector<int>{0, -1, -3}));
  EXPECT_EQ(content({0, 0, 0}).values, (std::vector<int>{-1, -2, -3}));
}

TEST(Partition, Contains) {
  EXPECT_TRUE(contains({1, 1, 0}, {3, 2, 1}));
  EXPECT_FALSE(contains({2, 0}, {1, 0}));
  const Partition mu{4, 2, 2};
  EXPECT_TRUE(contains(mu, mu));
  EXPECT_THROW(contains({1}, {1, 0}), VariableCountError);
}

TEST(Partition, SkewShapeNeedsSameLength) {
  EXPECT_THROW(SkewShape(Partition{1}, Partition{1, 0}), VariableCountError);
  EXPECT_NO_THROW(SkewShape(Partition{1, 0}, Partition{2, 0}));  // containment not required
}

TEST(Partition, ParseCliSyntax) {
  EXPECT_EQ(parse_partition("3,2,1", 3), (Partition{3, 2, 1}));
  EXPECT_EQ(parse_partition("", 3), Partition::zero(3));
  EXPECT_EQ(parse_partition("2", 3), (Partition{2, 0, 0}));
  EXPECT_EQ(parse_partition(" 2 , 1 "), (Partition{2, 1}));
  EXPECT_THROW(parse_partition("1,2,3,4", 3), ParseError);
  EXPECT_THROW(parse_partition("1,,2", 3), ParseError);
  EXPECT_THROW(parse_partition("1,x", 3), ParseError);
  EXPECT_THROW(parse_partition("1,2", 3), PartitionError);
}

TEST(Partition, EnumerationCountsAndOrder) {
  // Partitions of n into at most 3 parts: 1,1,2,3,4,5,7 for n = 0..6.
  EXPECT_EQ(partitions(3, 6).size(), 23u);
  // Into at most 4 parts, n <= 8: 1,1,2,3,5,6,9,11,15.
  EXPECT_EQ(partitions(4, 8).size(), 53u);
  const auto all = partitions(3, 5);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
  for (const auto& p : partitions(3, 6, 2)) EXPECT_LE(p[0], 2);
  EXPECT_EQ(partitions(0, 3).size(), 1u);
}

TEST(Partition, Subpartitions) {
  const Partition lambda{3, 2, 1};
  const auto subs = subpartitions(lambda);
  std::size_t brute = 0;
  for (const auto& mu : partitions(3, lambda.size())) brute += contains(mu, lambda);
  EXPECT_EQ(subs.size(), brute);
  for (const auto& mu : subs) EXPECT_TRUE(contains(mu, lambda));
}

TEST(PartitionProperty, BoxMovesAndContents) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& p : partitions(n, 7)) {
      const auto c = content(p).values;
      for (std::size_t i = 1; i < c.size(); ++i) ASSERT_GT(c[i - 1], c[i]);
      ASSERT_TRUE(seen.insert(c).second);
      for (std::size_t i = 1; i <= n; ++i) {
        if (auto r = remove_box(p, i)) {
          ASSERT_EQ(add_box(*r, i), p);
        }
        if (auto a = add_box(p, i)) {
          ASSERT_EQ(remove_box(*a, i), p);
          ASSERT_TRUE(contains(p, *a));
        }
      }
    }
  }
}
