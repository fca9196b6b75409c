#pragma once

#include <string>

#include "cpl/group.hpp"

namespace cpl {

// Generator-file ingestion:
//   {"name": str, "degree": n, "generators": [[int,...], ...]}
// where each generator lists the images of 0..n-1. Throws IngestError with a
// diagnostic when a generator is not a bijection or the file is malformed.
Group ingest_generator_file(const std::string& path,
                            std::size_t max_order = kDefaultMaxOrder);

Group ingest_generator_json(const std::string& json_text,
                            std::size_t max_order = kDefaultMaxOrder);

}  // namespace cpl
