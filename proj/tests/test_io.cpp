#include <gtest/gtest.h>

#include "dantzig/dantzig.hpp"

using namespace dantzig;

TEST(Ine, RoundTripBothFamilies) {
  for (const IntVector& t : std::vector<IntVector>{{2, 2, 2}, {3, 1, 4, 1, 5}}) {
    const auto hp = grlex_hrep(GrlexInstance(t));
    EXPECT_TRUE(equivalent_systems(parse_ine(write_ine(hp, "grlex")), hp));
    const auto hq = grevlex_hrep(GrevlexInstance(t));
    EXPECT_TRUE(equivalent_systems(parse_ine(write_ine(hq)), hq));
  }
}

TEST(Ine, Layout) {
  const auto text = write_ine(grevlex_hrep(GrevlexInstance({2, 2, 2})), "q");
  EXPECT_NE(text.find("H-representation\nbegin\n6 4 rational\n"), std::string::npos);
  EXPECT_NE(text.find("\n30 -6 -5 -4\n"), std::string::npos);
  EXPECT_NE(text.find("\n0 1 0 0\n"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 4), "end\n");
}

TEST(Ext, RoundTrip) {
  const auto v = grlex_vertices(GrlexInstance({2, 2, 2}));
  const auto text = write_ext(v);
  EXPECT_NE(text.find("7 4 rational"), std::string::npos);
  const auto back = parse_ext(text);
  ASSERT_EQ(back.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(back[i], to_rational_vector(v.vertices[i].x));
}

TEST(Parse, AcceptsCommentsAndFractions) {
  const std::string text =
      "* comment\nH-representation\nbegin\n 3 3 rational\n0 1 0\n0 0 1\n1/2 -1/4 -1/4\nend\n";
  const auto h = parse_ine(text);
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h.normal(2), (RationalVector{1, 1}));
  EXPECT_EQ(h.rhs()[2], 2);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_ine("begin\n1 2 rational\n0 1\nend\n"), ParseError);
  EXPECT_THROW(parse_ine("H-representation\nbegin\n2 3 rational\n0 1 0\nend\n"), ParseError);
  EXPECT_THROW(parse_ine("H-representation\nbegin\n1 3 rational\n0 1\nend\n"), ParseError);
  EXPECT_THROW(parse_ine("H-representation\nbegin\n1 3 real\n0 1 0\nend\n"), ParseError);
  EXPECT_THROW(parse_ine("H-representation\nbegin\n1 3 rational\n0 x 0\nend\n"), ParseError);
  EXPECT_THROW(parse_ext("V-representation\nbegin\n1 3 rational\n0 1 0\nend\n"), ParseError);
}

TEST(Dot, SymbolicLabels) {
  const auto text = write_dot(grlex_graph(GrlexInstance({2, 2, 2})), "P");
  EXPECT_EQ(text.rfind("graph P {\n", 0), 0u);
  EXPECT_NE(text.find("\"v(1,3)\";"), std::string::npos);
  EXPECT_NE(text.find("\"0\" -- \"w\";"), std::string::npos);
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '-')) / 2, 11u);
}

TEST(Labels, RoundTrip) {
  using L = VertexLabel;
  for (const auto& l : {L::zero(), L::theta(), L::w(), L::u(4), L::v(2, 5), L::ubar(7), L::vbar(1, 3), L::point(12)})
    EXPECT_EQ(parse_label(to_string(l)), l);
  EXPECT_FALSE(parse_label("q(1)").has_value());
}
