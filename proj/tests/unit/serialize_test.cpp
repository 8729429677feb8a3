#include <gtest/gtest.h>

#include "properties.hpp"
#include "symcone/csv.hpp"
#include "symcone/errors.hpp"
#include "symcone/random.hpp"
#include "symcone/serialize.hpp"

using namespace symcone;

TEST(Serialize, StructureSchema) {
  const StructurePtr s = ConeStructure::parse("orthant:3,soc:2,psd:2");
  const nlohmann::json j = structure_to_json(*s);
  EXPECT_EQ(j, nlohmann::json::parse(
                   R"([{"kind":"orthant","dim":3},{"kind":"soc","dim":2},{"kind":"psd","dim":2}])"));
  EXPECT_EQ(*structure_from_json(j), *s);
  EXPECT_EQ(*structure_from_json("no3+soc2+s2"), *s);
  EXPECT_THROW(structure_from_json(nlohmann::json::parse(R"([{"kind":"cube","dim":1}])")),
               ConfigError);
}

TEST(Serialize, PsdPackedRowMajorUpperTriangle) {
  Eigen::Matrix3d m;
  m << 1, 2, 3, 2, 4, 5, 3, 5, 6;
  const AlgebraElement x(psd(3), Eigen::Map<Eigen::VectorXd>(m.data(), 9));
  EXPECT_EQ(x.to_packed(), (std::vector<double>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(AlgebraElement::from_packed(psd(3), x.to_packed()).storage(), x.storage());
}

TEST(Serialize, ElementRoundTripIsExact) {
  Rng rng(1);
  for (const StructurePtr& s : properties::default_structures()) {
    for (int i = 0; i < 20; ++i) {
      const AlgebraElement x = random_element(s, rng, 1e3);
      const std::string text = element_to_json(x).dump();
      const AlgebraElement y = element_from_json(nlohmann::json::parse(text));
      ASSERT_EQ(y.storage(), x.storage());
      ASSERT_EQ(y.structure(), x.structure());
    }
  }
}

TEST(Serialize, ElementWrongLengthThrows) {
  const nlohmann::json j = {{"structure", "orthant:2"}, {"values", {1.0, 2.0, 3.0}}};
  EXPECT_THROW(element_from_json(j), ConfigError);
}

TEST(Csv, RoundTripAndEmptyCells) {
  const auto path = std::filesystem::temp_directory_path() / "symcone_csv_test" / "a.csv";
  {
    CsvWriter w(path, {"a", "b", "c"});
    w.row({std::int64_t{7}, 0.1, std::monostate{}});
    w.row({std::int64_t{-1}, 1.0 / 3.0, 1e-300});
    w.close();
  }
  const CsvTable t = read_csv(path);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][t.column("b")], 0.1);
  EXPECT_FALSE(t.rows[0][2].has_value());
  EXPECT_EQ(t.rows[1][1], 1.0 / 3.0);
  EXPECT_EQ(t.rows[1][2], 1e-300);
  EXPECT_THROW(t.column("z"), IoError);
  EXPECT_EQ(CsvWriter::format_double(0.1), "0.10000000000000001");
}

TEST(Csv, RowWidthMustMatchHeader) {
  const auto path = std::filesystem::temp_directory_path() / "symcone_csv_test" / "b.csv";
  CsvWriter w(path, {"a", "b"});
  EXPECT_THROW(w.row({1.0}), IoError);
}

TEST(Csv, UnwritableLocationThrows) {
  EXPECT_THROW(CsvWriter("/proc/symcone/none.csv", {"a"}), IoError);
}
