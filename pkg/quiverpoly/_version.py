"""Version of quiverpoly package."""

from version_query import predict_version_str

VERSION = predict_version_str()
