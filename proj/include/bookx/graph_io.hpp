#ifndef BOOKX_GRAPH_IO_HPP
#define BOOKX_GRAPH_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "bookx/convex_graph.hpp"
#include "bookx/zk.hpp"

namespace bookx {

/// Text form: `n <n> sides=<0|1>` followed by one `i j` line per edge.
std::string graph_to_text(const ConvexGraph& g);
ConvexGraph graph_from_text(std::string_view text);

nlohmann::json graph_to_json(const ConvexGraph& g);
ConvexGraph graph_from_json(const nlohmann::json& j);

/// {"n":..,"k":..,"pages":[[[i,j],...],...]}, pages by index, edges lex.
nlohmann::json drawing_to_json(const BookDrawing& d);
BookDrawing drawing_from_json(const nlohmann::json& j);

/// Parses either form, choosing JSON when the first non-blank char is '{'.
ConvexGraph read_graph_file(const std::filesystem::path& path);
BookDrawing read_drawing_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace bookx

#endif  // BOOKX_GRAPH_IO_HPP
