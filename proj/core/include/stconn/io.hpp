#pragma once

#include <stconn/circuit.hpp>
#include <stconn/family.hpp>
#include <stconn/graph.hpp>
#include <stconn/ledger.hpp>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

namespace stconn
{

/*! \brief MCIRC text format.
 *
 *   MCIRC 1 <n>
 *   G <AND|OR> <a> <b>      one line per gate, defining the next wire
 *   OUT <w1> [<w2> ...]
 *
 * Wires 0..n^2-1 are the inputs g_ij in row-major order, wire n^2 is the
 * constant zero. Lines end in '\n' with single spaces and no trailing
 * blanks. The reader accepts any whitespace and validates the result.
 */
void write_circuit( std::ostream& os, monotone_circuit const& circuit );
monotone_circuit read_circuit( std::istream& is );

/*! \brief FAMILY text format.
 *
 *   FAMILY <n> <m> <s> <l> <d>
 *   followed by m lines, each a set in ascending order (empty line = empty set)
 */
void write_family( std::ostream& os, covering_family const& family );
covering_family read_family( std::istream& is );

/*! \brief GRAPH text format: `GRAPH <n>` then n rows of n characters in {0,1}. */
void write_graph( std::ostream& os, adjacency_matrix const& graph );
adjacency_matrix read_graph( std::istream& is );

/* `# key=value` header lines, then `stage,label,predicted,measured` rows and a total row */
void write_ledger_csv( std::ostream& os, depth_ledger const& ledger, std::span<std::string const> header_lines = {} );

/* file helpers; throw error_kind::parse_error when the file cannot be opened */
monotone_circuit load_circuit( std::filesystem::path const& path );
void save_circuit( std::filesystem::path const& path, monotone_circuit const& circuit );
covering_family load_family( std::filesystem::path const& path );
void save_family( std::filesystem::path const& path, covering_family const& family );
adjacency_matrix load_graph( std::filesystem::path const& path );

} // namespace stconn
