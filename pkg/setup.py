"""Setup script for quiverpoly package."""

import setup_boilerplate


class Package(setup_boilerplate.Package):

    """Package metadata."""

    name = 'quiverpoly'
    description = 'exact quiver polynomials of Dynkin quivers via iterated residues'
    classifiers = [
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Operating System :: MacOS :: MacOS X',
        'Operating System :: POSIX :: Linux',
        'Operating System :: Microsoft :: Windows',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3 :: Only',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Utilities']
    keywords = ['quiver', 'Dynkin', 'degeneracy locus', 'Schur polynomial',
                'equivariant cohomology', 'iterated residue']
    entry_points = {
        'console_scripts': ['quiverpoly = quiverpoly.__main__:main']}


if __name__ == '__main__':
    Package.setup()
