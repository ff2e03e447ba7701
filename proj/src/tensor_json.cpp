#include "symtensor/tensor_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace symtensor {

using nlohmann::json;

json tensor_to_json(const SymTensor3& tensor) {
    json entries = json::array();
    for (const auto& [idx, value] : tensor.entries()) {
        entries.push_back({{"idx", {idx[0], idx[1], idx[2]}}, {"val", value.to_string()}});
    }
    return {{"dim", tensor.dim()}, {"entries", std::move(entries)}};
}

SymTensor3 tensor_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw DocumentError("tensor document must be a JSON object");
    }
    for (const auto& [key, _] : doc.items()) {
        if (key != "dim" && key != "entries") {
            throw DocumentError("unknown field '" + key + "' in tensor document");
        }
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<unsigned>() == 0) {
        throw DocumentError("'dim' must be a positive integer");
    }
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw DocumentError("'entries' must be an array");
    }
    const auto dim = doc["dim"].get<unsigned>();
    SymTensor3 tensor(dim);
    std::set<Index3> seen;
    for (const auto& entry : doc["entries"]) {
        if (!entry.is_object()) {
            throw DocumentError("tensor entry must be an object");
        }
        for (const auto& [key, _] : entry.items()) {
            if (key != "idx" && key != "val") {
                throw DocumentError("unknown field '" + key + "' in tensor entry");
            }
        }
        if (!entry.contains("idx") || !entry["idx"].is_array() || entry["idx"].size() != 3) {
            throw DocumentError("'idx' must be an array of three indices");
        }
        Index3 idx{};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& v = entry["idx"][i];
            if (!v.is_number_unsigned()) {
                throw DocumentError("index must be a positive integer");
            }
            idx[i] = v.get<unsigned>();
            if (idx[i] < 1 || idx[i] > dim) {
                throw DocumentError("index out of range 1.." + std::to_string(dim));
            }
        }
        if (!(idx[0] <= idx[1] && idx[1] <= idx[2])) {
            throw DocumentError("index triple must be sorted (i <= j <= k)");
        }
        if (!seen.insert(idx).second) {
            throw DocumentError("duplicate index triple");
        }
        if (!entry.contains("val")) {
            throw DocumentError("tensor entry is missing 'val'");
        }
        const auto& val = entry["val"];
        Rational value;
        try {
            if (val.is_string()) {
                value = Rational::parse(val.get<std::string>());
            } else if (val.is_number_integer()) {
                value = Rational::parse(val.dump());
            } else {
                throw DocumentError("'val' must be a rational string");
            }
        } catch (const std::invalid_argument& e) {
            throw DocumentError(e.what());
        }
        tensor.set(idx[0], idx[1], idx[2], value);
    }
    return tensor;
}

SymTensor3 parse_tensor_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    return tensor_from_json(doc);
}

SymTensor3 load_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DocumentError("cannot open tensor file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_tensor_document(buffer.str());
}

void save_tensor_file(const SymTensor3& tensor, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write tensor file '" + path + "'");
    }
    out << tensor_to_json(tensor).dump(2) << "\n";
}

}  // namespace symtensor
