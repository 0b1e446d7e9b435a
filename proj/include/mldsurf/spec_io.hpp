#pragma once

#include <string>

#include "mldsurf/germ.hpp"

namespace mldsurf {

/// Parses the versioned germ-spec text format:
///
///   mldsurf-spec v1
///   germ smooth|resolved
///   vertex <id> weight=<n> [genus=<n>] [nodes=<n>]
///   edge <id1> <id2> [mult=<n>]
///   branch coeff=<p/q> at=origin|<id>|<id1>^<id2>|free [cluster=<m>[@v:<id>|@e:<k>],...]
///   share <b1> <b2> <k>
///
/// Blank lines and lines starting with '#' are ignored. Branch indices in
/// `share` lines are 0-based in order of appearance; omitted pairs get the
/// attach-site defaults. Errors carry 1-based line numbers; unknown keys are
/// rejected.
GermModel parse_spec(const std::string& text);

GermModel load_spec_file(const std::string& path);

/// Canonical serialization; parse(serialize(parse(s))) == parse(s).
std::string serialize_spec(const GermModel& g);

}  // namespace mldsurf
