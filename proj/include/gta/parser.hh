#ifndef GTA_PARSER_HH
#define GTA_PARSER_HH

#include <optional>
#include <string>
#include <vector>

#include "gta/model.hh"

namespace gta {

struct parse_error_t {
    int line{0};
    int column{0};
    std::string message;
};

std::string to_string(parse_error_t const & e);

struct parse_result_t {
    std::optional<model_t> model;
    std::vector<parse_error_t> errors;
    bool ok() const { return model.has_value() && errors.empty(); }
};

parse_result_t parse_model(std::string const & text);

parse_result_t parse_model_file(std::string const & path);

// textual form of a model, using the surface syntax kept by the parser
std::string print_model(model_t const & m);

} // namespace gta

#endif // GTA_PARSER_HH
