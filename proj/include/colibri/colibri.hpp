#pragma once

#include "colibri/circle.hpp"
#include "colibri/classify.hpp"
#include "colibri/error.hpp"
#include "colibri/format.hpp"
#include "colibri/fuzzyset.hpp"
#include "colibri/image.hpp"
#include "colibri/io.hpp"
#include "colibri/metrics.hpp"
#include "colibri/partition.hpp"
#include "colibri/render.hpp"
