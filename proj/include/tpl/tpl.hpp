#pragma once

#include "tpl/constructions.hpp"
#include "tpl/error.hpp"
#include "tpl/families.hpp"
#include "tpl/graph.hpp"
#include "tpl/labeling.hpp"
#include "tpl/numtheory.hpp"
#include "tpl/search.hpp"
#include "tpl/serialize.hpp"
