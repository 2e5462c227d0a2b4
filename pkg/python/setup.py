import logging
import os
import re
import sys

from enum import Enum

import setuptools

logger = logging.getLogger(__name__)

SUPPORTED_PYTHONS = [(3, 7), (3, 8), (3, 9), (3, 10), (3, 11)]

ROOT_DIR = os.path.dirname(os.path.abspath(__file__))

DEMOS_SUBDIR = os.path.join("entrench", "demos")


def find_version(*filepath):
    # Extract version information from filepath
    with open(os.path.join(ROOT_DIR, *filepath)) as fp:
        version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]",
                                  fp.read(), re.M)
        if version_match:
            return version_match.group(1)
        raise RuntimeError("Unable to find version string.")


class BuildType(Enum):
    DEFAULT = 1
    DEBUG = 2


class SetupSpec:
    def __init__(self, name: str, description: str, build_type: BuildType):
        self.name: str = name
        version = find_version("entrench", "__init__.py")
        # add .dbg suffix if debug mode is on.
        if build_type == BuildType.DEBUG:
            self.version: str = f"{version}+dbg"
        else:
            self.version = version
        self.description: str = description
        self.build_type: BuildType = build_type
        self.files_to_include: list = []
        self.install_requires: list = []
        self.extras: dict = {}

    def get_package_data(self):
        # package_data paths are relative to the package directory
        return {"entrench": [os.path.relpath(f, "entrench")
                             for f in self.files_to_include]}


build_type = os.getenv("ENTRENCH_DEBUG_BUILD")
if build_type == "debug":
    BUILD_TYPE = BuildType.DEBUG
else:
    BUILD_TYPE = BuildType.DEFAULT

# "entrench" primary wheel package.
setup_spec = SetupSpec(
    "entrench",
    "Entrenchment relations over finite propositional languages: closure "
    "under rule profiles, maxiconsistent inference, the duality with "
    "nonmonotonic consequence relations and seeded verification suites.",
    BUILD_TYPE)

# entrench data files
entrench_files = [
    "entrench/core/profiles.yaml",
    "entrench/core/profiles-schema.json",
]


def walk_directory(directory):
    file_list = []
    for (root, dirs, filenames) in os.walk(directory):
        for name in filenames:
            file_list.append(os.path.join(root, name))
    return file_list


setup_spec.files_to_include += entrench_files
# Include all the shipped demo frames and snapshots
setup_spec.files_to_include += [
    os.path.relpath(f, ROOT_DIR)
    for f in walk_directory(os.path.join(ROOT_DIR, DEMOS_SUBDIR))]

# If you're adding dependencies for entrench extras, please
# also update the matching section of requirements.txt.

setup_spec.extras = {
    "test": [
        "pytest",
        "hypothesis",
    ],
}

# These are the main dependencies for users of entrench. This list
# should be carefully curated. If you change it, please reflect
# the change in the matching section of requirements.txt
setup_spec.install_requires = [
    "colorama",
    "click >= 7.0",
    "jsonschema",
    "numpy >= 1.17",
    "pyparsing >= 3.0",
    "pyyaml",
    "prettytable",
]


def check_python_version():
    if tuple(sys.version_info[:2]) not in SUPPORTED_PYTHONS:
        msg = ("Detected Python version {}, which is not supported. "
               "Only Python {} are supported.").format(
            ".".join(map(str, sys.version_info[:2])),
            ", ".join(".".join(map(str, v)) for v in SUPPORTED_PYTHONS))
        logger.warning(msg)


if __name__ == "__main__":
    check_python_version()

    setuptools.setup(
        name=setup_spec.name,
        version=setup_spec.version,
        description=setup_spec.description,
        long_description="entrench",
        keywords="entrenchment nonmonotonic-reasoning logic",
        classifiers=[
            "Programming Language :: Python :: 3.{}".format(minor)
            for _, minor in SUPPORTED_PYTHONS
        ],
        packages=setuptools.find_packages(),
        package_data=setup_spec.get_package_data(),
        install_requires=setup_spec.install_requires,
        extras_require=setup_spec.extras,
        python_requires=">=3.7",
        entry_points={
            "console_scripts": [
                "entrench=entrench.scripts.scripts:main",
            ]
        },
        include_package_data=True,
        zip_safe=False,
        license="Apache 2.0")
