#include <doctest.h>

#include "mammoseg/annotations.hpp"

using namespace mammoseg;

TEST_CASE("circumscribed benign mass record") {
  auto anns = parse_annotations("mdb001 G CIRC B 535 425 197");
  REQUIRE(anns.size() == 1);
  const Annotation& a = anns[0];
  CHECK(a.record_id == "mdb001");
  CHECK(a.tissue == Tissue::FattyGlandular);
  CHECK(a.abnormality == Abnormality::Circumscribed);
  CHECK(a.severity == Severity::Benign);
  CHECK(a.center == Point{535, 425});
  CHECK(a.radius == 197);
}

TEST_CASE("normal record carries nothing else") {
  auto anns = parse_annotations("mdb003 D NORM");
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].tissue == Tissue::Dense);
  CHECK(anns[0].abnormality == Abnormality::Normal);
  CHECK_FALSE(anns[0].severity.has_value());
  CHECK_FALSE(anns[0].center.has_value());
  CHECK_FALSE(anns[0].radius.has_value());
}

TEST_CASE("circumscribed malignant mass record") {
  auto anns = parse_annotations("mdbX F CIRC M 338 314 56");
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].tissue == Tissue::Fatty);
  CHECK(anns[0].severity == Severity::Malignant);
  CHECK(anns[0].center == Point{338, 314});
  CHECK(anns[0].radius == 56);
}

TEST_CASE("multi-line files parse record by record, blank lines skipped") {
  auto anns = parse_annotations(
      "mdb001 G CIRC B 535 425 197\n"
      "\n"
      "mdb002 G CIRC B 522 280 69\n"
      "mdb003 D NORM\n"
      "mdb005 F CALC B\n");
  REQUIRE(anns.size() == 4);
  CHECK(anns[1].center == Point{522, 280});
  CHECK(anns[3].abnormality == Abnormality::Calcification);
  CHECK(anns[3].severity == Severity::Benign);
  CHECK_FALSE(anns[3].center.has_value());
}

TEST_CASE("every abnormality code is accepted") {
  auto anns = parse_annotations(
      "a F CALC B 1 2 3\n"
      "b F CIRC B 1 2 3\n"
      "c F SPIC B 1 2 3\n"
      "d F MISC B 1 2 3\n"
      "e F ARCH B 1 2 3\n"
      "f F ASYM B 1 2 3\n"
      "g F NORM\n");
  REQUIRE(anns.size() == 7);
  CHECK(anns[3].abnormality == Abnormality::IllDefined);
  CHECK(anns[4].abnormality == Abnormality::ArchitecturalDistortion);
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(parse_annotations("mdb001 X CIRC B 1 2 3"), ParseError);  // tissue
  CHECK_THROWS_AS(parse_annotations("mdb001 G BLOB B 1 2 3"), ParseError);  // abnormality
  CHECK_THROWS_AS(parse_annotations("mdb001 G CIRC Q 1 2 3"), ParseError);  // severity
  CHECK_THROWS_AS(parse_annotations("mdb003 D NORM B"), ParseError);        // NORM + extras
  CHECK_THROWS_AS(parse_annotations("mdb003 D NORM 1 2 3"), ParseError);
  CHECK_THROWS_AS(parse_annotations("mdb001 G CIRC B x 2 3"), ParseError);  // non-numeric
  CHECK_THROWS_AS(parse_annotations("mdb001 G CIRC B 1 2"), ParseError);    // partial coords
  CHECK_THROWS_AS(parse_annotations("mdb001 G CIRC B 1 2 0"), ParseError);  // radius <= 0
  CHECK_THROWS_AS(parse_annotations("mdb001 G"), ParseError);
}

TEST_CASE("seed conversion flips the bottom-left y axis") {
  auto anns = parse_annotations("mdb001 G CIRC B 535 425 197");
  // a 1024-high scan: row 425 from the bottom is row 598 from the top
  CHECK(annotation_seed(anns[0], 1024) == Point{535, 1024 - 1 - 425});
  CHECK(annotation_seed(anns[0], 1024) == Point{535, 598});
  // a 200-high image: y=60 from the bottom lands on row 139
  auto small = parse_annotations("p F CIRC M 100 60 20");
  CHECK(annotation_seed(small[0], 200) == Point{100, 139});
}

TEST_CASE("seed conversion requires a center") {
  auto anns = parse_annotations("mdb003 D NORM");
  CHECK_THROWS_AS(annotation_seed(anns[0], 1024), InvalidArgument);
}
