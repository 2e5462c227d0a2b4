# Root-level shim: the package sources and build spec live in python/.
# This lets `pip install -e .` work from the repository root.
import os
import runpy

import setuptools

ROOT_DIR = os.path.dirname(os.path.abspath(__file__))
PY_DIR = os.path.join(ROOT_DIR, "python")

_spec_globals = runpy.run_path(os.path.join(PY_DIR, "setup.py"),
                               run_name="entrench_setup_spec")
setup_spec = _spec_globals["setup_spec"]

if __name__ == "__main__":
    setuptools.setup(
        name=setup_spec.name,
        version=setup_spec.version,
        description=setup_spec.description,
        long_description="entrench",
        keywords="entrenchment nonmonotonic-reasoning logic",
        package_dir={"": "python"},
        packages=setuptools.find_packages("python"),
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
