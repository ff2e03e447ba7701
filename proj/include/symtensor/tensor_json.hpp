#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "symtensor/tensor.hpp"

namespace symtensor {

/// Malformed tensor document (bad JSON, unknown fields, invalid indices).
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"dim": n, "entries": [{"idx": [i, j, k], "val": "p/q"}, ...]}
/// Entries sorted by index triple; only nonzero entries emitted.
nlohmann::json tensor_to_json(const SymTensor3& tensor);

/// Accepts exactly the fields "dim" and "entries"; each entry exactly "idx"
/// (sorted 1-based triple) and "val" (rational string or JSON integer).
/// Duplicate triples are rejected. Throws DocumentError.
SymTensor3 tensor_from_json(const nlohmann::json& doc);

SymTensor3 parse_tensor_document(const std::string& text);
SymTensor3 load_tensor_file(const std::string& path);
void save_tensor_file(const SymTensor3& tensor, const std::string& path);

}  // namespace symtensor
