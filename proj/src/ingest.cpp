#include "cpl/ingest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cpl {

Group ingest_generator_json(const std::string& json_text,
                            std::size_t max_order) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw IngestError(std::string("generator file is not valid JSON: ") +
                      e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j.contains("degree") ||
      !j.contains("generators"))
    throw IngestError(
        "generator file must be an object with name, degree and generators");

  std::string name;
  int degree = 0;
  try {
    name = j.at("name").get<std::string>();
    degree = j.at("degree").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw IngestError(std::string("bad name/degree field: ") + e.what());
  }
  if (degree < 1) throw IngestError("degree must be >= 1");

  std::vector<Permutation> gens;
  const auto& raw = j.at("generators");
  if (!raw.is_array()) throw IngestError("generators must be an array");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::vector<int> images;
    try {
      images = raw[i].get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      throw IngestError("generator " + std::to_string(i) +
                        " is not a list of integers");
    }
    if (static_cast<int>(images.size()) != degree)
      throw IngestError("generator " + std::to_string(i) + " has length " +
                        std::to_string(images.size()) + ", expected degree " +
                        std::to_string(degree));
    try {
      gens.emplace_back(std::move(images));
    } catch (const DegreeMismatch&) {
      throw IngestError("generator " + std::to_string(i) +
                        " is not a bijection on 0.." +
                        std::to_string(degree - 1));
    }
  }
  return Group::from_generators(degree, std::move(gens), name, max_order);
}

Group ingest_generator_file(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open generator file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_generator_json(buf.str(), max_order);
}

}  // namespace cpl
