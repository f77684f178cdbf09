#include <gtest/gtest.h>

#include "attractor/error.hpp"
#include "attractor/io.hpp"
#include "attractor/reductions.hpp"
#include "oracles.hpp"

using namespace attractor;

TEST(PlainInstance, CodePointsInOrder) {
  const auto doc = parse_plain_instance("abbcabccac\n", Shape::string);
  EXPECT_EQ(std::get<Text>(doc.instance), oracle::text("abbcabccac"));
  EXPECT_EQ(doc.symbols.glyphs(), (std::vector<std::string>{"a", "b", "c"}));

  const auto set = parse_plain_instance("abbbcd\nbca\n\ndec\n", Shape::set);
  EXPECT_EQ(std::get<StringSet>(set.instance), oracle::set({"abbbcd", "bca", "dec"}));

  const auto utf = parse_plain_instance("αβα", Shape::circular);
  EXPECT_EQ(std::get<CircularText>(utf.instance).symbols(), (Word{0, 1, 0}));
  EXPECT_EQ(utf.symbols.render(Word{1, 0}), "βα");
}

TEST(PlainInstance, Errors) {
  EXPECT_THROW(parse_plain_instance("ab\ncd\n", Shape::string), ParseError);
  EXPECT_THROW(parse_plain_instance("", Shape::circular), ParseError);
  EXPECT_THROW(parse_plain_instance("", Shape::set), ParseError);
  EXPECT_THROW(split_code_points("\xff"), ParseError);
}

TEST(JsonInstance, RoundTrip) {
  const auto tr = set_to_string(oracle::set({"ab", "ba"}));
  SymbolTable symbols({"a", "b"});
  symbols.assign(2, "#1");
  const InstanceDocument doc{tr.target, symbols};
  const auto text = format_instance_json(doc);
  const auto back = parse_instance(text);
  EXPECT_EQ(back.instance, doc.instance);
  EXPECT_EQ(back.symbols.glyphs(), symbols.glyphs());
  EXPECT_EQ(back.symbols.render(Word{0, 2}), "a #1");
  EXPECT_THROW(parse_instance(text, Shape::set), ParseError);
  EXPECT_THROW(parse_instance_json("{\"format\": \"other\"}"), ParseError);
  EXPECT_THROW(parse_instance_json("{"), ParseError);
}

TEST(SymbolTable, Placeholders) {
  SymbolTable t({"x"});
  EXPECT_EQ(t.glyph(4), "<4>");
  EXPECT_EQ(t.find("x"), 0u);
  EXPECT_THROW(SymbolTable({"x", "x"}), InvalidParameter);
  EXPECT_THROW(t.assign(1, "x"), InvalidParameter);
}

TEST(Markings, Grammar) {
  EXPECT_EQ(parse_marking("2,7,9"), Marking::from_positions({2, 7, 9}));
  EXPECT_EQ(parse_marking(" 9 , 2\n"), Marking::from_positions({2, 9}));
  EXPECT_EQ(parse_marking("1:2,3:4"), Marking({Site{1, 2}, Site{3, 4}}));
  EXPECT_EQ(format_marking(Marking({Site{1, 2}, Site{3, 4}}), true), "1:2,3:4");
  EXPECT_EQ(format_marking(Marking::from_positions({2, 7, 9}), false), "2,7,9");
  EXPECT_TRUE(parse_marking("").empty());
  EXPECT_THROW(parse_marking("2,x"), ParseError);
  EXPECT_EQ(parse_edge_list("4, 0,5"), (EdgeSelection{0, 4, 5}));
  EXPECT_EQ(format_edge_list(EdgeSelection{0, 4, 5}), "0,4,5");
}

TEST(Graph, RoundTrip) {
  const auto sg = build_2substring_graph(oracle::set({"abbbcd", "bca", "dec"}));
  const auto doc = graph_document(sg, SymbolTable({"a", "b", "c", "d", "e"}));
  const auto text = format_graph(doc);
  const auto back = parse_graph(text);
  EXPECT_EQ(back.graph, sg.graph);
  EXPECT_EQ(back.vertex_labels, doc.vertex_labels);
  EXPECT_EQ(back.vertex_labels[1], "bb");
  EXPECT_EQ(back.color_labels, doc.color_labels);
  EXPECT_EQ(format_graph(back), text);
}

TEST(Graph, ParseErrors) {
  EXPECT_THROW(parse_graph("vertices 2\n"), ParseError);
  EXPECT_THROW(parse_graph("colored-graph 1\nvertices 2\ncolors 1\nedge 0 2 0\n"), ParseError);
  EXPECT_THROW(parse_graph("colored-graph 1\nvertices 2\ncolors 1\nedge 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("colored-graph 1\nvertices 2\ncolors 1\nnode 0\n"), ParseError);
  const auto g = parse_graph("# comment\ncolored-graph 1\nvertices 1\ncolors 1\n\nedge 0 0 0\n");
  EXPECT_TRUE(g.graph.has_loops());
}

TEST(Dimacs, RoundTrip) {
  const auto f = oracle::f0();
  const auto text = format_dimacs(f, {"F0"});
  EXPECT_EQ(text.substr(0, 5), "c F0\n");
  EXPECT_EQ(parse_dimacs(text), f);
  const auto g = generate_3b2(9, 3);
  EXPECT_EQ(parse_dimacs(format_dimacs(g)), g);
  // Clauses may span lines.
  EXPECT_EQ(parse_dimacs("p cnf 2 1\n1\n-2 0\n").clauses.size(), 1u);
}

TEST(Dimacs, Errors) {
  EXPECT_THROW(parse_dimacs("1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p dnf 2 1\n1 2 0\n"), ParseError);
}

TEST(Assignments, Grammar) {
  EXPECT_EQ(parse_assignment("1,-2,3", 3), Assignment({true, false, true}));
  EXPECT_EQ(parse_assignment("-3 1 -2", 3), Assignment({true, false, false}));
  EXPECT_EQ(format_assignment(Assignment({true, false, true})), "1,-2,3");
  EXPECT_THROW(parse_assignment("1,-2", 3), ParseError);
  EXPECT_THROW(parse_assignment("1,-1,2,3", 3), ParseError);
  EXPECT_THROW(parse_assignment("1,2,3,4", 3), ParseError);
}

TEST(TransformSidecar, RoundTrip) {
  const auto tr = transform(oracle::circular("abc"), Shape::set);
  const SymbolTable symbols({"a", "b", "c"});
  const auto text = format_transform_sidecar(tr, symbols, symbols);
  const auto back = parse_transform_sidecar(text);
  EXPECT_EQ(back.result.source, tr.source);
  EXPECT_EQ(back.result.target, tr.target);
  EXPECT_EQ(back.result.size_offset, tr.size_offset);
  EXPECT_EQ(back.result.position_map, tr.position_map);
  EXPECT_EQ(back.result.delimiters, tr.delimiters);

  const auto stitched = sat_to_attractor(oracle::f0());
  const SymbolTable glyphs(stitched.glyphs);
  const auto again = parse_transform_sidecar(format_transform_sidecar(stitched.stitched, glyphs, glyphs));
  EXPECT_EQ(again.result.forced_sites(), stitched.stitched.forced_sites());
  EXPECT_EQ(again.target_symbols.glyph(stitched.stitched.delimiters.front()), "#1");
}

TEST(SubstringGraphSidecar, ListsEveryOccurrence) {
  const auto sg = build_2substring_graph(oracle::set({"abbcabccac"}));
  const auto text = format_substring_graph_sidecar(sg, SymbolTable({"a", "b", "c"}));
  EXPECT_NE(text.find("\"substring-graph-provenance\""), std::string::npos);
  EXPECT_NE(text.find("\"interior\""), std::string::npos);
  EXPECT_NE(text.find("\"prefix\""), std::string::npos);
}
