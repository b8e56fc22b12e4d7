#pragma once

#include <json.hpp>

#include "reokern/io.hpp"

namespace reokern::detail {

using json = nlohmann::ordered_json;

json document_to_json(const instance_document &doc);
instance_document document_from_json(const json &j);

}  // namespace reokern::detail
