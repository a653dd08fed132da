#pragma once

#include "argrank/af.hpp"
#include "argrank/arg_set.hpp"
#include "argrank/axioms.hpp"
#include "argrank/base_relations.hpp"
#include "argrank/errors.hpp"
#include "argrank/ext_ranking.hpp"
#include "argrank/io.hpp"
#include "argrank/semantics.hpp"
#include "argrank/social_ranking.hpp"
#include "argrank/verify.hpp"
